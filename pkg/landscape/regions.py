"""
landscape/regions.py

Region membership on the expected landscape and the sampled covering check.

R1   negative curvature along x_bar
R2x  the gradient points away from the origin
R2h  the gradient points away from the nearest of +-x_bar
R3   the strong-convexity neighbourhood dist(x, {+-x_bar}) <= rho

R2h uses the outward unit direction d_x = (x - s x_bar) / ||x - s x_bar|| with s
the sign of <x, x_bar> (s = +1 on ties) and d_x = e_1 when x = s x_bar.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet

import numpy as np

from utils.logging_config import get_logger
from utils.validators import ValidationError, validate_open_interval, validate_vector
from .assumptions import LAMBDA_MIN

logger = get_logger("landscape")

COVERING_CHUNK = 10_000


class Region(str, Enum):
    R1 = "R1"
    R2X = "R2x"
    R2H = "R2h"
    R3 = "R3"


@dataclass
class CoveringReport:
    uncovered_count: int
    samples_checked: int
    region_counts: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "uncovered_count": self.uncovered_count,
            "samples_checked": self.samples_checked,
            "region_counts": dict(self.region_counts),
        }


def local_radius(truth_norm: float, lam: float) -> float:
    return (1.0 - lam) * truth_norm / np.sqrt(3.0)


def region_masks(X: np.ndarray, truth: np.ndarray, eps_mean: float,
                 lam: float) -> Dict[Region, np.ndarray]:
    """Boolean membership of every row of X in each region."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    truth = np.asarray(truth, dtype=float)
    bb = float(np.dot(truth, truth))
    b_norm = np.sqrt(bb)
    xx = np.einsum("ij,ij->i", X, X)
    bx = X @ truth
    x_norm = np.sqrt(xx)
    dist_sq = np.maximum(xx - 2.0 * np.abs(bx) + bb, 0.0)

    curvature = 6.0 * bx ** 2 + (3.0 * xx - bb - eps_mean) * bb - 2.0 * bb ** 2
    in_r1 = curvature <= -xx * bb / 100.0 - bb ** 2 / 50.0

    in_r3 = dist_sq <= local_radius(b_norm, lam) ** 2

    radial = 3.0 * xx ** 2 - 2.0 * bx ** 2 - bb * xx - eps_mean * xx
    in_r2x = radial >= xx * bb / 500.0 + xx ** 2 / 100.0

    grad = (3.0 * xx - bb - eps_mean)[:, None] * X - 2.0 * bx[:, None] * truth[None, :]
    sign = np.where(bx < 0, -1.0, 1.0)
    outward = X - sign[:, None] * truth[None, :]
    out_norm = np.sqrt(dist_sq)
    degenerate = out_norm == 0.0
    safe_norm = np.where(degenerate, 1.0, out_norm)
    directional = np.where(degenerate, grad[:, 0],
                           np.einsum("ij,ij->i", outward, grad) / safe_norm)
    in_r2h = (
        (directional >= x_norm * bb / 250.0)
        & (x_norm >= 11.0 / 20.0 * b_norm)
        & (x_norm <= b_norm)
        & (out_norm >= b_norm / 3.0)
    )

    return {Region.R1: in_r1, Region.R2X: in_r2x, Region.R2H: in_r2h, Region.R3: in_r3}


def classify_region(x, truth, eps_mean: float, lam: float) -> FrozenSet[Region]:
    truth = validate_vector(truth, "truth")
    x = validate_vector(x, "x", length=truth.shape[0])
    if not np.any(truth):
        raise ValidationError("classify_region needs a nonzero truth")
    validate_open_interval(lam, LAMBDA_MIN, 1.0, "lambda")
    masks = region_masks(x[None, :], truth, eps_mean, lam)
    return frozenset(region for region, mask in masks.items() if mask[0])


def sample_ball(n: int, count: int, radius: float, rng: np.random.Generator) -> np.ndarray:
    """Uniform directions with norms uniform on [0, radius]."""
    directions = rng.standard_normal((count, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    return rng.uniform(0.0, radius, size=count)[:, None] * directions


def verify_covering(truth, eps_mean: float, lam: float, n_samples: int,
                    seed: int) -> CoveringReport:
    """Count samples of ||x|| <= 2 ||x_bar|| lying in none of the four regions."""
    truth = validate_vector(truth, "truth")
    bb = float(np.dot(truth, truth))
    if bb == 0:
        raise ValidationError("verify_covering needs a nonzero truth")
    validate_open_interval(lam, LAMBDA_MIN, 1.0, "lambda")
    if not 0.0 <= eps_mean <= bb / (9.0 * np.sqrt(2.0)):
        raise ValidationError(f"eps_mean={eps_mean} outside [0, ||x_bar||^2 / (9 sqrt 2)]")
    if local_radius(np.sqrt(bb), lam) < np.sqrt(bb) / 3.0:
        logger.warning(f"rho < ||x_bar||/3 at lambda={lam}; R2h and R3 may leave a gap")

    rng = np.random.default_rng(seed)
    uncovered = 0
    counts = {region.value: 0 for region in Region}
    remaining = n_samples
    while remaining > 0:
        size = min(COVERING_CHUNK, remaining)
        X = sample_ball(truth.shape[0], size, 2.0 * np.sqrt(bb), rng)
        masks = region_masks(X, truth, eps_mean, lam)
        covered = np.zeros(size, dtype=bool)
        for region, mask in masks.items():
            counts[region.value] += int(np.count_nonzero(mask))
            covered |= mask
        uncovered += int(size - np.count_nonzero(covered))
        remaining -= size

    report = CoveringReport(uncovered_count=uncovered, samples_checked=n_samples,
                            region_counts=counts)
    logger.info("Covering check finished", extra=report.to_dict())
    return report
