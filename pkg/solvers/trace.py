from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np


class StopReason(str, Enum):
    MAX_ITERS = "max_iters"
    GRAD_TOL = "grad_tol"


@dataclass
class SolverTrace:
    """
    Per-iteration history of one solver run.

    Index 0 of ``f_values``/``rel_errors``/``L_history``/``backtrack_counts``
    describes x0; index k describes x_k. ``L_history`` holds the accepted L_k
    (NaN for policies without backtracking).
    """

    f_values: List[float] = field(default_factory=list)
    rel_errors: List[float] = field(default_factory=list)
    L_history: List[float] = field(default_factory=list)
    backtrack_counts: List[int] = field(default_factory=list)
    recorded_iters: List[int] = field(default_factory=list)
    iterates: List[np.ndarray] = field(default_factory=list)
    final: Optional[np.ndarray] = None
    iterations_run: int = 0
    stop_reason: StopReason = StopReason.MAX_ITERS

    def record(self, k: int, x: np.ndarray, f: float, rel_error: Optional[float],
               L: float, backtracks: int, keep_iterate: bool) -> None:
        self.f_values.append(f)
        self.rel_errors.append(np.nan if rel_error is None else rel_error)
        self.L_history.append(L)
        self.backtrack_counts.append(backtracks)
        if keep_iterate:
            self.recorded_iters.append(k)
            self.iterates.append(x.copy())

    @property
    def final_rel_error(self) -> float:
        return self.rel_errors[-1] if self.rel_errors else np.nan

    def summary(self) -> dict:
        return {
            "iterations_run": self.iterations_run,
            "stop_reason": self.stop_reason.value,
            "final_f": self.f_values[-1] if self.f_values else np.nan,
            "final_rel_error": self.final_rel_error,
            "total_backtracks": int(np.sum(self.backtrack_counts)),
        }
