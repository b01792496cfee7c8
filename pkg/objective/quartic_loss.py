"""
objective/quartic_loss.py

Intensity least-squares loss f(x) = (1/4m) sum_r (y[r] - |(Ax)[r]|^2)^2 with its
derivatives. Everything is expressed through ``apply``/``adjoint_apply`` so the
same code serves Gaussian and CDP ensembles.
"""

from typing import Tuple

import numpy as np

from config import MirrorPRConfig
from sensing.base_ensemble import SensingEnsemble
from sensing.gaussian_ensemble import GaussianEnsemble
from sensing.measurements import MeasurementSet
from utils.validators import ValidationError, validate_positive, validate_vector


class QuarticLoss:
    """Objective bound to one measurement set."""

    def __init__(self, measurements: MeasurementSet):
        self.measurements = measurements
        self.ensemble = measurements.ensemble
        self.y = measurements.y
        self.m = measurements.m
        self.n = measurements.n

    def _check(self, x) -> np.ndarray:
        return validate_vector(x, "x", length=self.n)

    def residual(self, x) -> Tuple[np.ndarray, np.ndarray]:
        """Return (Ax, |Ax|^2 - y)."""
        ax = self.ensemble.apply(self._check(x))
        return ax, np.abs(ax) ** 2 - self.y

    def value(self, x) -> float:
        _, w = self.residual(x)
        return float(np.dot(w, w)) / (4.0 * self.m)

    def gradient(self, x) -> np.ndarray:
        ax, w = self.residual(x)
        return self.ensemble.adjoint_apply(w * ax) / self.m

    def value_and_gradient(self, x) -> Tuple[float, np.ndarray]:
        ax, w = self.residual(x)
        return float(np.dot(w, w)) / (4.0 * self.m), self.ensemble.adjoint_apply(w * ax) / self.m

    def hessian_vector(self, x, v) -> np.ndarray:
        ax, w = self.residual(x)
        av = self.ensemble.apply(validate_vector(v, "v", length=self.n))
        curvature = 2.0 * ax * np.real(np.conj(ax) * av) + w * av
        return self.ensemble.adjoint_apply(curvature) / self.m

    def hessian(self, x) -> np.ndarray:
        """Dense Hessian; limited to n <= DENSE_HESSIAN_MAX_N."""
        if self.n > MirrorPRConfig.DENSE_HESSIAN_MAX_N:
            raise ValidationError(
                f"dense Hessian requested for n={self.n}; use hessian_vector above "
                f"n={MirrorPRConfig.DENSE_HESSIAN_MAX_N}"
            )
        x = self._check(x)
        if isinstance(self.ensemble, GaussianEnsemble):
            A = self.ensemble.matrix
            ax = A @ x
            weights = 3.0 * ax * ax - self.y
            H = (A.T * weights) @ A / self.m
        else:
            H = np.column_stack([self.hessian_vector(x, e) for e in np.eye(self.n)])
        return 0.5 * (H + H.T)

    def bregman(self, x, z) -> float:
        x = self._check(x)
        z = self._check(z)
        fz, gz = self.value_and_gradient(z)
        return self.value(x) - fz - float(np.dot(gz, x - z))


def f_value(M: MeasurementSet, x) -> float:
    return QuarticLoss(M).value(x)


def f_gradient(M: MeasurementSet, x) -> np.ndarray:
    return QuarticLoss(M).gradient(x)


def f_hessian(M: MeasurementSet, x) -> np.ndarray:
    return QuarticLoss(M).hessian(x)


def f_hessian_vector(M: MeasurementSet, x, v) -> np.ndarray:
    return QuarticLoss(M).hessian_vector(x, v)


def bregman_f(M: MeasurementSet, x, z) -> float:
    """D_f(x, z) = f(x) - f(z) - <grad f(z), x - z>; may be negative."""
    return QuarticLoss(M).bregman(x, z)


def crude_smoothness_bound(E: SensingEnsemble, eps_inf: float) -> float:
    """L with L * psi - f convex: (1/m) sum_r ||a_r||^2 (3 ||a_r||^2 + eps_inf)."""
    eps_inf = validate_positive(eps_inf, "eps_inf", allow_zero=True)
    r = E.row_norms_sq()
    return float(np.sum(r * (3.0 * r + eps_inf)) / E.m)
