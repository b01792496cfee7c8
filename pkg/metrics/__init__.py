"""
Reconstruction error metrics.
"""

from .errors import (
    ErrorReport,
    dist_to_signs,
    relative_error,
    align_sign,
    success_threshold,
    evaluate,
    gate_sigma,
)

__all__ = [
    'ErrorReport',
    'dist_to_signs',
    'relative_error',
    'align_sign',
    'success_threshold',
    'evaluate',
    'gate_sigma',
]
