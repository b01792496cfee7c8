"""
Bregman geometry of the quartic entropy.
"""

from .cubic import positive_cubic_root, cubic_residual
from .entropy import (
    EntropyEval,
    psi,
    grad_psi,
    hess_psi,
    grad_psi_star,
    entropy_eval,
    bregman_divergence,
    bregman_psi,
    theta_bound,
)

__all__ = [
    'positive_cubic_root',
    'cubic_residual',
    'EntropyEval',
    'psi',
    'grad_psi',
    'hess_psi',
    'grad_psi_star',
    'entropy_eval',
    'bregman_divergence',
    'bregman_psi',
    'theta_bound',
]
