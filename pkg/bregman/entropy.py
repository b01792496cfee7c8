"""
bregman/entropy.py

Quartic entropy psi(x) = 1/4 ||x||^4 + 1/2 ||x||^2 and its Bregman geometry.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from utils.validators import validate_same_length
from .cubic import positive_cubic_root


@dataclass
class EntropyEval:
    value: float
    gradient: np.ndarray


def psi(x) -> float:
    sq = float(np.dot(x, x))
    return 0.25 * sq * sq + 0.5 * sq


def grad_psi(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return (float(np.dot(x, x)) + 1.0) * x


def hess_psi(x) -> np.ndarray:
    """(||x||^2 + 1) I + 2 x x^T."""
    x = np.asarray(x, dtype=float)
    return (float(np.dot(x, x)) + 1.0) * np.eye(x.shape[0]) + 2.0 * np.outer(x, x)


def entropy_eval(x) -> EntropyEval:
    x = np.asarray(x, dtype=float)
    return EntropyEval(value=psi(x), gradient=grad_psi(x))


def grad_psi_star(z) -> np.ndarray:
    """
    Inverse mirror map: the unique x with grad_psi(x) = z.

    x = t * z where t is the positive root of ||z||^2 t^3 + t - 1 = 0.
    """
    z = np.asarray(z, dtype=float)
    return positive_cubic_root(float(np.dot(z, z))) * z


def bregman_divergence(phi: Callable, grad_phi: Callable, x, z) -> float:
    """D_phi(x, z) = phi(x) - phi(z) - <grad phi(z), x - z>."""
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    validate_same_length(x, z)
    return float(phi(x) - phi(z) - np.dot(grad_phi(z), x - z))


def bregman_psi(x, z) -> float:
    """
    D_psi(x, z), computed from the closed form

        1/4 ||x||^4 + 3/4 ||z||^4 - ||z||^2 <x, z> + 1/2 ||x - z||^2

    which stays non-negative in floating point near x = z.
    """
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    validate_same_length(x, z)
    xx = float(np.dot(x, x))
    zz = float(np.dot(z, z))
    xz = float(np.dot(x, z))
    diff = x - z
    # 1/4 (||x||^2 - ||z||^2)^2 + 1/2 ||z||^2 ||x - z||^2 + 1/2 ||x - z||^2
    quartic = 0.25 * (xx - zz) ** 2 + 0.5 * zz * (xx - 2.0 * xz + zz)
    return float(quartic + 0.5 * np.dot(diff, diff))


def theta_bound(radius: float, anchor_norm: float) -> float:
    """Smoothness bound of psi on B(anchor, radius): 6 (anchor_norm^2 + radius^2) + 1."""
    return 6.0 * (anchor_norm ** 2 + radius ** 2) + 1.0
