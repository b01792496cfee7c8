"""
sensing/measurements.py

Noise models and the intensity measurement y[r] = |<a_r, x>|^2 + eps[r].
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from utils.validators import validate_finite, validate_vector
from .base_ensemble import SensingEnsemble


class NoiseModel(str, Enum):
    NONE = "none"
    UNIFORM_NONNEG = "uniform_nonneg"
    UNIFORM_SYMMETRIC = "uniform_symmetric"


@dataclass(frozen=True)
class NoiseSpec:
    """
    Additive intensity noise.

    UNIFORM_NONNEG draws eps[r] ~ U[0, 2 * target_mean]. UNIFORM_SYMMETRIC draws
    U[-c, c] with c = half_width (target_mean when unset) and shifts the sample
    so its empirical mean equals target_mean.
    """

    model: NoiseModel = NoiseModel.UNIFORM_NONNEG
    target_mean: float = 1e-5
    seed: int = 0
    half_width: Optional[float] = None

    def __post_init__(self):
        if not np.isfinite(self.target_mean) or self.target_mean < 0:
            raise ValueError(f"target_mean must be >= 0, got {self.target_mean}")
        if self.half_width is not None and self.half_width < 0:
            raise ValueError(f"half_width must be >= 0, got {self.half_width}")

    @classmethod
    def none(cls) -> "NoiseSpec":
        return cls(model=NoiseModel.NONE, target_mean=0.0)

    def draw(self, m: int) -> np.ndarray:
        if self.model is NoiseModel.NONE:
            return np.zeros(m)

        rng = np.random.default_rng(self.seed)
        if self.model is NoiseModel.UNIFORM_NONNEG:
            return rng.uniform(0.0, 2.0 * self.target_mean, size=m)

        c = self.target_mean if self.half_width is None else self.half_width
        u = rng.uniform(-c, c, size=m)
        return (u - u.mean()) + self.target_mean


@dataclass
class MeasurementSet:
    y: np.ndarray
    ensemble: SensingEnsemble
    truth: Optional[np.ndarray] = None
    noise: Optional[np.ndarray] = None

    def __post_init__(self):
        self.y = validate_vector(self.y, "y", length=self.ensemble.m)
        validate_finite(self.y, "y")
        if self.truth is not None:
            self.truth = validate_vector(self.truth, "truth", length=self.ensemble.n)
        if self.noise is not None:
            self.noise = validate_vector(self.noise, "noise", length=self.ensemble.m)

    @property
    def m(self) -> int:
        return self.ensemble.m

    @property
    def n(self) -> int:
        return self.ensemble.n

    @property
    def noise_mean(self) -> float:
        """Empirical mean of eps (0 when the noise is unknown)."""
        return 0.0 if self.noise is None else float(np.mean(self.noise))

    @property
    def noise_inf(self) -> float:
        return 0.0 if self.noise is None else float(np.max(np.abs(self.noise)))

    @property
    def noise_norm(self) -> float:
        return 0.0 if self.noise is None else float(np.linalg.norm(self.noise))

    def noiseless_part(self) -> "MeasurementSet":
        """Measurements of the same truth with eps removed."""
        if self.truth is None:
            raise ValueError("noiseless_part needs the ground truth")
        y = np.abs(self.ensemble.apply(self.truth)) ** 2
        return MeasurementSet(y=y, ensemble=self.ensemble, truth=self.truth,
                              noise=np.zeros(self.m))


def measure(E: SensingEnsemble, truth, noise: Optional[NoiseSpec] = None) -> MeasurementSet:
    truth = validate_vector(truth, "truth", length=E.n)
    eps = (noise or NoiseSpec.none()).draw(E.m)
    y = np.abs(E.apply(truth)) ** 2 + eps
    return MeasurementSet(y=y, ensemble=E, truth=truth.copy(), noise=eps)
