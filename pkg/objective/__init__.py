"""
Noise-aware quartic objective and its closed-form expectation.
"""

from .quartic_loss import (
    QuarticLoss,
    f_value,
    f_gradient,
    f_hessian,
    f_hessian_vector,
    bregman_f,
    crude_smoothness_bound,
)
from .expected_model import (
    ExpectedModel,
    expected_f,
    expected_grad,
    expected_hessian,
)

__all__ = [
    'QuarticLoss',
    'f_value',
    'f_gradient',
    'f_hessian',
    'f_hessian_vector',
    'bregman_f',
    'crude_smoothness_bound',
    'ExpectedModel',
    'expected_f',
    'expected_grad',
    'expected_hessian',
]
