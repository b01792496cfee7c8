from typing import Callable, Tuple

import numpy as np

from utils.logging_config import get_logger

logger = get_logger("spectral")


class SpectralInitError(ValueError):
    """Raised when the spectral initializer cannot be formed."""


def power_iteration(matvec: Callable[[np.ndarray], np.ndarray], n: int, iters: int,
                    seed: int) -> Tuple[np.ndarray, float]:
    """Top eigenpair of a symmetric PSD operator; returns (unit vector, Rayleigh quotient)."""
    if iters < 1:
        raise ValueError(f"power iteration needs iters >= 1, got {iters}")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)

    for it in range(iters):
        w = np.asarray(matvec(v), dtype=float)
        if not np.all(np.isfinite(w)):
            raise SpectralInitError(f"matvec returned non-finite values at iteration {it}")
        norm = np.linalg.norm(w)
        if norm == 0.0:
            logger.warning("Power iteration hit the null space; returning current vector")
            return v, 0.0
        v = w / norm

    w = np.asarray(matvec(v), dtype=float)
    if not np.all(np.isfinite(w)):
        raise SpectralInitError("matvec returned non-finite values")
    return v, float(np.dot(v, w))
