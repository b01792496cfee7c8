"""
solvers/mirror_descent.py

Mirror descent on the quartic objective in the geometry of
psi(x) = 1/4 ||x||^4 + 1/2 ||x||^2, with a constant step or backtracking on the
relative smoothness constant.
"""

from typing import Tuple

import numpy as np

from bregman.entropy import bregman_psi, grad_psi, grad_psi_star
from config import MirrorPRConfig
from objective.quartic_loss import QuarticLoss
from sensing.measurements import MeasurementSet
from utils.validators import ValidationError, validate_same_length
from .base_solver import (
    Backtracking,
    BacktrackingError,
    BaseSolver,
    ConstantStep,
    NonFiniteError,
    SolverConfig,
)
from .trace import SolverTrace


def mirror_step(x, gamma: float, grad) -> np.ndarray:
    """x+ = grad_psi_star(grad_psi(x) - gamma * grad)."""
    x = np.asarray(x, dtype=float)
    grad = np.asarray(grad, dtype=float)
    validate_same_length(x, grad, names=("x", "grad"))
    with np.errstate(over="ignore", invalid="ignore"):
        z = grad_psi(x) - gamma * grad
        z_sq = float(np.dot(z, z))
    if not np.isfinite(z_sq):
        raise NonFiniteError(f"mirror step left the representable range (||x||={np.linalg.norm(x):.3e})")
    return grad_psi_star(z)


class MirrorDescentSolver(BaseSolver):
    """
    Backtracking: at iteration k try gamma = (1 - kappa) / L, accept when
    D_f(x+, x) <= xi * L * D_psi(x+, x), otherwise L <- L / xi. After acceptance
    the next iteration starts from xi * L, which may fall below L0.
    """

    def __init__(self, config: SolverConfig):
        if not isinstance(config.step_policy, (ConstantStep, Backtracking)):
            raise ValidationError(
                f"mirror descent supports constant or backtracking steps, got "
                f"{type(config.step_policy).__name__}"
            )
        super().__init__("mirror_descent", config)
        self._L = np.nan

    def _initial_L(self) -> float:
        policy = self.config.step_policy
        return policy.L0 if isinstance(policy, Backtracking) else np.nan

    def _start(self, loss: QuarticLoss, x0: np.ndarray) -> None:
        self._L = self._initial_L()

    def _step(self, loss: QuarticLoss, k: int, x: np.ndarray, f: float,
              g: np.ndarray) -> Tuple[np.ndarray, float, np.ndarray, float, int]:
        policy = self.config.step_policy
        if isinstance(policy, ConstantStep):
            x_new = mirror_step(x, policy.gamma, g)
            f_new, g_new = self._evaluate(loss, x_new)
            return x_new, f_new, g_new, np.nan, 0

        L = self._L
        trials = 0
        while True:
            x_new = mirror_step(x, (1.0 - policy.kappa) / L, g)
            f_new, g_new = self._evaluate(loss, x_new)
            d_f = f_new - f - float(np.dot(g, x_new - x))
            if d_f <= policy.xi * L * bregman_psi(x_new, x) + MirrorPRConfig.BACKTRACK_SLACK:
                break
            trials += 1
            if trials >= MirrorPRConfig.BACKTRACK_MAX_TRIALS:
                raise BacktrackingError(
                    f"backtracking exceeded {MirrorPRConfig.BACKTRACK_MAX_TRIALS} trials "
                    f"at iteration {k} (L={L:.3e}); check L0 and the data"
                )
            L = L / policy.xi

        self._L = policy.xi * L
        return x_new, f_new, g_new, L, trials


def mirror_descent(M: MeasurementSet, x0, cfg: SolverConfig) -> SolverTrace:
    return MirrorDescentSolver(cfg).run(M, x0)
