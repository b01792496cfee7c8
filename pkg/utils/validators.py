"""
utils/validators.py

Argument checks shared across the numerical modules.
"""

from typing import Optional

import numpy as np


class ValidationError(ValueError):
    """Raised when an argument violates a documented precondition."""


class DimensionMismatchError(ValidationError):
    """Raised when vector or operator sizes disagree."""


def validate_vector(x, name: str = "x", length: Optional[int] = None,
                    dtype=float) -> np.ndarray:
    """Return ``x`` as a 1-D array, checking its length when given."""
    arr = np.asarray(x, dtype=dtype)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatchError(f"{name} has length {arr.shape[0]}, expected {length}")
    return arr


def validate_same_length(a: np.ndarray, b: np.ndarray,
                         names: tuple = ("x", "z")) -> None:
    if np.shape(a) != np.shape(b):
        raise DimensionMismatchError(
            f"{names[0]} and {names[1]} differ in shape: {np.shape(a)} vs {np.shape(b)}"
        )


def validate_positive(value: float, name: str, allow_zero: bool = False) -> float:
    value = float(value)
    if not np.isfinite(value) or value < 0 or (value == 0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise ValidationError(f"{name} must be finite and {bound}, got {value}")
    return value


def validate_open_interval(value: float, low: float, high: float, name: str) -> float:
    value = float(value)
    if not (low < value < high):
        raise ValidationError(f"{name} must lie in ({low:.6g}, {high:.6g}), got {value}")
    return value


def validate_finite(arr: np.ndarray, name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite values")
