"""
objective/expected_model.py

Closed forms of E[f], grad E[f] and the expected Hessian under the Gaussian model,
given the truth, the empirical noise mean and ||eps||^2 / m.
"""

from dataclasses import dataclass

import numpy as np

from sensing.measurements import MeasurementSet


@dataclass(frozen=True)
class ExpectedModel:
    truth: np.ndarray
    noise_mean: float = 0.0
    noise_sq_norm_over_m: float = 0.0

    def __post_init__(self):
        if self.noise_mean < 0:
            raise ValueError(f"noise_mean must be >= 0, got {self.noise_mean}")
        if self.noise_sq_norm_over_m < 0:
            raise ValueError("noise_sq_norm_over_m must be >= 0")
        object.__setattr__(self, "truth", np.asarray(self.truth, dtype=float))

    @classmethod
    def from_measurements(cls, M: MeasurementSet) -> "ExpectedModel":
        if M.truth is None:
            raise ValueError("ExpectedModel needs measurements with a known truth")
        return cls(
            truth=M.truth,
            noise_mean=max(M.noise_mean, 0.0),
            noise_sq_norm_over_m=M.noise_norm ** 2 / M.m,
        )


def expected_f(model: ExpectedModel, x) -> float:
    x = np.asarray(x, dtype=float)
    xb = model.truth
    xx = float(np.dot(x, x))
    bb = float(np.dot(xb, xb))
    bx = float(np.dot(xb, x))
    eps_bar = model.noise_mean
    return (0.75 * (xx * xx + bb * bb) - 0.5 * bb * xx - bx * bx
            + model.noise_sq_norm_over_m / 4.0 - eps_bar * (xx - bb) / 2.0)


def expected_grad(model: ExpectedModel, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    xb = model.truth
    xx = float(np.dot(x, x))
    bb = float(np.dot(xb, xb))
    return 3.0 * xx * x - 2.0 * xb * float(np.dot(xb, x)) - bb * x - model.noise_mean * x


def expected_hessian(model: ExpectedModel, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    xb = model.truth
    eye = np.eye(x.shape[0])
    xx = float(np.dot(x, x))
    bb = float(np.dot(xb, xb))
    return (3.0 * (2.0 * np.outer(x, x) + xx * eye) - 2.0 * np.outer(xb, xb)
            - bb * eye - model.noise_mean * eye)
