"""
landscape/assumptions.py

Signal-to-noise assumption check and the derived convergence constants
(relative strong convexity sigma, local radius rho, initialization radius r,
relative smoothness L, linear rate nu and noise floor varsigma).
"""

from dataclasses import asdict, dataclass

import numpy as np

from bregman.entropy import theta_bound
from sensing.measurements import MeasurementSet
from utils.logging_config import get_logger
from utils.validators import ValidationError, validate_open_interval, validate_vector

logger = get_logger("landscape")

# lambda must exceed the maximizer of (1 - lambda) sqrt(lambda) / (2 sqrt 6)
LAMBDA_MIN = 1.0 / (9.0 * np.sqrt(2.0))


class AssumptionError(ValidationError):
    """Raised when the noise level makes the local analysis vacuous."""


@dataclass(frozen=True)
class SnrReport:
    lam: float
    eps_mean: float
    eps_inf: float
    c_s_actual: float
    c_s_limit: float
    mean_ok: bool
    inf_ok: bool
    passed: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lam")
        out["pass"] = out.pop("passed")
        return out


@dataclass(frozen=True)
class LandscapeParams:
    sigma: float
    rho: float
    r: float
    r_squared: float
    L: float
    nu: float
    varsigma: float
    theta_rho: float
    gamma: float

    def to_dict(self) -> dict:
        return asdict(self)


def _scale(truth: np.ndarray) -> float:
    return min(float(np.dot(truth, truth)), 1.0)


def snr_check(truth, eps, lam: float) -> SnrReport:
    truth = validate_vector(truth, "truth")
    eps = validate_vector(eps, "eps")
    validate_open_interval(lam, LAMBDA_MIN, 1.0, "lambda")

    scale = _scale(truth)
    eps_mean = float(np.mean(eps)) if eps.size else 0.0
    eps_inf = float(np.max(np.abs(eps))) if eps.size else 0.0
    margin = lam * scale - eps_mean
    c_s_limit = (1.0 - lam) * float(np.linalg.norm(truth)) * np.sqrt(max(margin, 0.0)) / (
        2.0 * np.sqrt(6.0) * scale
    )
    c_s_actual = eps_inf / scale
    mean_ok = bool(0.0 <= eps_mean < lam * scale)
    inf_ok = bool(c_s_actual < c_s_limit)
    return SnrReport(
        lam=float(lam),
        eps_mean=eps_mean,
        eps_inf=eps_inf,
        c_s_actual=c_s_actual,
        c_s_limit=float(c_s_limit),
        mean_ok=mean_ok,
        inf_ok=inf_ok,
        passed=mean_ok and inf_ok,
    )


def convergence_params(truth, eps, lam: float, varrho: float, kappa: float,
                       m: int) -> LandscapeParams:
    truth = validate_vector(truth, "truth")
    eps = validate_vector(eps, "eps")
    report = snr_check(truth, eps, lam)
    if not report.passed:
        raise AssumptionError(f"noise level violates the SNR assumption: {report.to_dict()}")
    validate_open_interval(kappa, 0.0, 1.0, "kappa")

    scale = _scale(truth)
    truth_sq = float(np.dot(truth, truth))
    eps_sq = float(np.dot(eps, eps))
    spread = max(truth_sq / 3.0 + report.eps_inf, 1.0)
    margin = lam * scale - report.eps_mean
    validate_open_interval(varrho, 0.0, margin / (2.0 * spread), "varrho")

    sigma = margin - varrho * spread
    rho = (1.0 - lam) * np.sqrt(truth_sq) / np.sqrt(3.0)
    theta_rho = theta_bound(rho, np.sqrt(truth_sq))
    r_squared = (rho ** 2 - 4.0 * eps_sq / (m * sigma)) / max(theta_rho, 1.0)
    if r_squared <= 0:
        raise AssumptionError(f"initialization radius is empty (r^2 = {r_squared:.3e})")

    L = 3.0 + report.eps_mean + varrho * spread
    floor_margin = report.c_s_limit * scale - report.eps_mean
    varsigma = 2.0 * np.sqrt(2.0) * np.sqrt(eps_sq) / np.sqrt(m * floor_margin) if eps_sq > 0 else 0.0

    params = LandscapeParams(
        sigma=float(sigma),
        rho=float(rho),
        r=float(np.sqrt(r_squared)),
        r_squared=float(r_squared),
        L=float(L),
        nu=float((1.0 - kappa) * sigma / L),
        varsigma=float(varsigma),
        theta_rho=float(theta_rho),
        gamma=float((1.0 - kappa) / L),
    )
    logger.debug("Computed convergence parameters", extra=params.to_dict())
    return params


def dist_argmin_bound(eps, truth, m: int) -> float:
    truth_norm = float(np.linalg.norm(truth))
    if truth_norm == 0:
        raise ValidationError("dist_argmin_bound needs a nonzero truth")
    return 8.0 * float(np.linalg.norm(eps)) / (np.sqrt(m) * truth_norm)


def empirical_snr(M: MeasurementSet) -> float:
    """sum_r |<a_r, x_bar>|^4 / ||eps||^2 (inf for noiseless data)."""
    if M.truth is None:
        raise ValidationError("empirical_snr needs the ground truth")
    signal = float(np.sum(np.abs(M.ensemble.apply(M.truth)) ** 4))
    noise = M.noise_norm ** 2
    return np.inf if noise == 0 else signal / noise


def linear_rate_envelope(params: LandscapeParams, k: int, eps, m: int) -> float:
    """Upper envelope (1 - gamma sigma)^(k-1) rho^2 + 2 ||eps||^2 / (m sigma) of dist^2(x_k)."""
    eps_sq = float(np.dot(eps, eps))
    contraction = 1.0 - params.gamma * params.sigma
    return contraction ** (k - 1) * params.rho ** 2 + 2.0 * eps_sq / (m * params.sigma)
