from typing import Tuple

import numpy as np

from config import MirrorPRConfig
from objective.quartic_loss import QuarticLoss
from sensing.measurements import MeasurementSet
from utils.validators import ValidationError
from .base_solver import BaseSolver, ConstantStep, SolverConfig, WirtingerSchedule
from .trace import SolverTrace


class WirtingerFlowSolver(BaseSolver):
    """Gradient descent x <- x - (mu_k / ||x0||^2) grad f(x) on the same objective."""

    def __init__(self, config: SolverConfig):
        if not isinstance(config.step_policy, (ConstantStep, WirtingerSchedule)):
            raise ValidationError(
                "Wirtinger flow takes a constant mu or a WirtingerSchedule, got "
                f"{type(config.step_policy).__name__}"
            )
        super().__init__("wirtinger_flow", config)
        self._x0_sq = np.nan

    def _start(self, loss: QuarticLoss, x0: np.ndarray) -> None:
        self._x0_sq = float(np.dot(x0, x0))
        if self._x0_sq == 0.0:
            raise ValidationError("Wirtinger flow needs a nonzero starting point")

    def mu(self, k: int) -> float:
        policy = self.config.step_policy
        if isinstance(policy, ConstantStep):
            return policy.gamma
        return policy.mu(k)

    def _step(self, loss: QuarticLoss, k: int, x: np.ndarray, f: float,
              g: np.ndarray) -> Tuple[np.ndarray, float, np.ndarray, float, int]:
        x_new = x - (self.mu(k) / self._x0_sq) * g
        f_new, g_new = self._evaluate(loss, x_new)
        return x_new, f_new, g_new, np.nan, 0


def default_wirtinger_config(max_iters: int = 2000, record_every: int = 100) -> SolverConfig:
    return SolverConfig(step_policy=ConstantStep(MirrorPRConfig.WF_MU),
                        max_iters=max_iters, record_every=record_every)


def wirtinger_flow(M: MeasurementSet, x0, cfg: SolverConfig) -> SolverTrace:
    return WirtingerFlowSolver(cfg).run(M, x0)
