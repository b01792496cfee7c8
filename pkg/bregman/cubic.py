"""
bregman/cubic.py

Positive root of a * t^3 + t - 1 = 0 for a >= 0.

For a > 0 the cubic is strictly increasing on t > 0 with value -1 at t = 0, so the
root is unique and lies in (0, 1]. Cardano's formula gives t = U - 1/(3 a U) with
U = a^(-1/3) * cbrt(1/2 + sqrt(1/4 + 1/(27 a))); the difference cancels badly for
small a, so it is evaluated in the rationalized form

    t = 1 / (a * (U^2 + U*w + w^2)),  w = 1 / (3 a U)

and polished with Newton steps.
"""

from typing import Union

import numpy as np

from config import MirrorPRConfig

ArrayLike = Union[float, np.ndarray]

NEWTON_POLISH_STEPS = 2


def cubic_residual(a: ArrayLike, t: ArrayLike) -> ArrayLike:
    return a * t ** 3 + t - 1.0


def positive_cubic_root(a: ArrayLike) -> ArrayLike:
    """Vectorized positive root of a t^3 + t - 1 = 0; returns 1 where a is ~0."""
    a_arr = np.asarray(a, dtype=float)
    if np.any(a_arr < 0) or not np.all(np.isfinite(a_arr)):
        raise ValueError("cubic coefficient must be finite and non-negative")

    guard = MirrorPRConfig.CUBIC_ZERO_GUARD
    tiny = a_arr < guard
    a_safe = np.where(tiny, 1.0, a_arr)

    u = a_safe ** (-1.0 / 3.0) * np.cbrt(0.5 + np.sqrt(0.25 + 1.0 / (27.0 * a_safe)))
    w = 1.0 / (3.0 * a_safe * u)
    t = 1.0 / (a_safe * (u * u + u * w + w * w))

    for _ in range(NEWTON_POLISH_STEPS):
        t = t - cubic_residual(a_safe, t) / (3.0 * a_safe * t * t + 1.0)

    t = np.where(tiny, 1.0, t)
    return float(t) if np.ndim(a) == 0 else t
