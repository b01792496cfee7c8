from dataclasses import dataclass

import numpy as np

from utils.validators import ValidationError, validate_positive, validate_vector


@dataclass(frozen=True)
class SaddleSphere:
    """{x : x^T x_bar = 0, ||x||^2 = radius_sq}."""

    radius_sq: float
    normal: np.ndarray


@dataclass(frozen=True)
class CriticalCatalogue:
    origin: np.ndarray
    minimizers: np.ndarray  # shape (2, n): +x_eps, -x_eps
    saddle_sphere: SaddleSphere


def critical_catalogue(truth, eps_mean: float) -> CriticalCatalogue:
    """Critical points of the expected objective for noise mean eps_mean >= 0."""
    truth = validate_vector(truth, "truth")
    truth_sq = float(np.dot(truth, truth))
    if truth_sq == 0:
        raise ValidationError("critical_catalogue needs a nonzero truth")
    eps_mean = validate_positive(eps_mean, "eps_mean", allow_zero=True)

    x_eps = truth * np.sqrt(1.0 + eps_mean / (3.0 * truth_sq))
    return CriticalCatalogue(
        origin=np.zeros_like(truth),
        minimizers=np.stack([x_eps, -x_eps]),
        saddle_sphere=SaddleSphere(radius_sq=(truth_sq + eps_mean) / 3.0, normal=truth.copy()),
    )


def sample_saddle_points(catalogue: CriticalCatalogue, count: int, seed: int) -> np.ndarray:
    sphere = catalogue.saddle_sphere
    normal = sphere.normal / np.linalg.norm(sphere.normal)
    if normal.shape[0] < 2:
        raise ValidationError("the saddle sphere is empty in dimension 1")

    rng = np.random.default_rng(seed)
    points = rng.standard_normal((count, normal.shape[0]))
    points -= np.outer(points @ normal, normal)
    points /= np.linalg.norm(points, axis=1, keepdims=True)
    return np.sqrt(sphere.radius_sq) * points
