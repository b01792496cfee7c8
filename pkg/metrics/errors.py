"""
metrics/errors.py

Distance to the solution set {x_bar, -x_bar} and the success gate.
"""

from dataclasses import dataclass

import numpy as np

from config import MirrorPRConfig
from utils.validators import validate_positive, validate_same_length


@dataclass(frozen=True)
class ErrorReport:
    dist: float
    rel_error: float
    success: bool
    threshold: float

    def to_dict(self) -> dict:
        return {
            "dist": self.dist,
            "rel_error": self.rel_error,
            "success": self.success,
            "threshold": self.threshold,
        }


def dist_to_signs(x, truth) -> float:
    x = np.asarray(x, dtype=float)
    truth = np.asarray(truth, dtype=float)
    validate_same_length(x, truth, names=("x", "truth"))
    return float(min(np.linalg.norm(x - truth), np.linalg.norm(x + truth)))


def relative_error(x, truth) -> float:
    return dist_to_signs(x, truth) / float(np.linalg.norm(truth))


def align_sign(x, truth) -> np.ndarray:
    """Return whichever of x, -x is closer to truth."""
    x = np.asarray(x, dtype=float)
    return x if np.linalg.norm(x - truth) <= np.linalg.norm(x + truth) else -x


def success_threshold(eps, m: int, sigma: float) -> float:
    """2 ||eps|| / sqrt(m sigma), or the noiseless floor when eps is identically 0."""
    sigma = validate_positive(sigma, "sigma")
    eps_norm = float(np.linalg.norm(np.asarray(eps, dtype=float)))
    if eps_norm == 0.0:
        return MirrorPRConfig.SUCCESS_FLOOR
    return 2.0 * eps_norm / np.sqrt(m * sigma)


def evaluate(x, truth, threshold: float) -> ErrorReport:
    dist = dist_to_signs(x, truth)
    rel = dist / float(np.linalg.norm(truth))
    return ErrorReport(dist=dist, rel_error=rel, success=bool(rel < threshold), threshold=threshold)


def gate_sigma(truth, eps_mean: float, lam: float) -> float:
    """lam * min(||x_bar||^2, 1) - eps_mean, the sigma used by the success gate."""
    truth_sq = float(np.dot(truth, truth))
    return lam * min(truth_sq, 1.0) - eps_mean
