"""
Spectral initialization by power iteration.
"""

from .power_iteration import power_iteration, SpectralInitError
from .initializer import SpectralResult, spectral_init, spectral_matrix

__all__ = [
    'power_iteration',
    'SpectralInitError',
    'SpectralResult',
    'spectral_init',
    'spectral_matrix',
]
