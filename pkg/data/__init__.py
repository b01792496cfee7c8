"""Deterministic synthetic signals and images for experiments and tests."""

from .synthetic import random_unit_signal, phantom_image

__all__ = ['random_unit_signal', 'phantom_image']
