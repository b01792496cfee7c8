"""
solvers/base_solver.py

Step policies, solver configuration, solver errors and the shared iteration loop.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from config import MirrorPRConfig
from metrics.errors import relative_error
from objective.quartic_loss import QuarticLoss
from sensing.measurements import MeasurementSet
from utils.logging_config import get_logger
from utils.validators import ValidationError, validate_vector
from .trace import SolverTrace, StopReason


class SolverError(RuntimeError):
    """Numerical abort inside a solver run."""


class NonFiniteError(SolverError):
    pass


class BacktrackingError(SolverError):
    pass


@dataclass(frozen=True)
class ConstantStep:
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValidationError(f"constant step must be > 0, got {self.gamma}")


@dataclass(frozen=True)
class Backtracking:
    L0: float = MirrorPRConfig.BACKTRACK_L0
    kappa: float = MirrorPRConfig.BACKTRACK_KAPPA
    xi: float = MirrorPRConfig.BACKTRACK_XI

    def __post_init__(self):
        if not self.L0 > 0:
            raise ValidationError(f"L0 must be > 0, got {self.L0}")
        if not 0 < self.kappa < 1:
            raise ValidationError(f"kappa must lie in (0, 1), got {self.kappa}")
        if not 0 < self.xi <= 1:
            raise ValidationError(f"xi must lie in (0, 1], got {self.xi}")


@dataclass(frozen=True)
class WirtingerSchedule:
    """mu_k = min(1 - exp(-k / ramp), mu_max)."""

    mu_max: float = MirrorPRConfig.WF_MU_MAX
    ramp: float = MirrorPRConfig.WF_RAMP

    def __post_init__(self):
        if not self.mu_max > 0 or not self.ramp > 0:
            raise ValidationError("mu_max and ramp must be > 0")

    def mu(self, k: int) -> float:
        return min(1.0 - np.exp(-k / self.ramp), self.mu_max)


StepPolicy = Union[ConstantStep, Backtracking, WirtingerSchedule]


@dataclass(frozen=True)
class SolverConfig:
    step_policy: StepPolicy = field(default_factory=Backtracking)
    max_iters: int = 1000
    grad_tol: float = 0.0
    record_every: int = MirrorPRConfig.RECORD_EVERY

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValidationError(f"max_iters must be positive, got {self.max_iters}")
        if self.grad_tol < 0:
            raise ValidationError(f"grad_tol must be >= 0, got {self.grad_tol}")
        if self.record_every < 1:
            raise ValidationError(f"record_every must be positive, got {self.record_every}")


class BaseSolver(ABC):
    """Base class for first-order solvers on the quartic objective"""

    def __init__(self, name: str, config: SolverConfig):
        self.name = name
        self.config = config
        self.logger = get_logger(f"solver.{name}")

    @abstractmethod
    def _start(self, loss: QuarticLoss, x0: np.ndarray) -> None:
        """Reset per-run state before the first step."""

    @abstractmethod
    def _step(self, loss: QuarticLoss, k: int, x: np.ndarray, f: float,
              g: np.ndarray) -> Tuple[np.ndarray, float, np.ndarray, float, int]:
        """Advance from x_{k-1} to x_k; return (x, f, grad, L_k, backtracks)."""

    def _initial_L(self) -> float:
        return np.nan

    def log_action(self, action: str, details: Dict[str, Any]):
        self.logger.debug(f"{self.name}: {action}", extra=details)

    def _evaluate(self, loss: QuarticLoss, x: np.ndarray) -> Tuple[float, np.ndarray]:
        f, g = loss.value_and_gradient(x)
        if not np.isfinite(f) or not np.all(np.isfinite(g)):
            raise NonFiniteError(f"{self.name}: non-finite objective or gradient (f={f})")
        return f, g

    def run(self, M: MeasurementSet, x0) -> SolverTrace:
        """
        Iterate from x0 until max_iters or ||grad f|| <= grad_tol.

        1. Evaluate f and grad f at x0 and record iteration 0
        2. Stop if the gradient tolerance is met
        3. Take one policy-specific step and record it
        """
        cfg = self.config
        loss = QuarticLoss(M)
        x = validate_vector(x0, "x0", length=M.n).copy()
        truth = M.truth
        self._start(loss, x)

        f, g = self._evaluate(loss, x)
        trace = SolverTrace()
        rel = relative_error(x, truth) if truth is not None else None
        trace.record(0, x, f, rel, self._initial_L(), 0, keep_iterate=True)
        self.log_action("start", {"n": M.n, "m": M.m, "f0": f})

        k = 0
        while k < cfg.max_iters:
            if float(np.linalg.norm(g)) <= cfg.grad_tol:
                trace.stop_reason = StopReason.GRAD_TOL
                break
            k += 1
            x, f, g, L_k, backtracks = self._step(loss, k, x, f, g)
            rel = relative_error(x, truth) if truth is not None else None
            keep = (k % cfg.record_every == 0) or k == cfg.max_iters
            trace.record(k, x, f, rel, L_k, backtracks, keep_iterate=keep)

        if trace.recorded_iters[-1] != k:
            trace.recorded_iters.append(k)
            trace.iterates.append(x.copy())
        trace.final = x
        trace.iterations_run = k
        self.log_action("finished", trace.summary())
        return trace


def random_initialization(n: int, seed: int, radius: float = 1.0) -> np.ndarray:
    """Uniform sample on the sphere of the given radius."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    return radius * v / np.linalg.norm(v)
