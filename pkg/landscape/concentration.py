"""
landscape/concentration.py

Monte-Carlo checks of how close the sample Hessian is to its expectation, and
the injectivity margin of the sensing operator.
"""

import numpy as np

from objective.expected_model import ExpectedModel, expected_hessian
from objective.quartic_loss import QuarticLoss
from sensing.base_ensemble import SensingEnsemble
from sensing.gaussian_ensemble import GaussianEnsemble, gaussian_ensemble
from sensing.measurements import MeasurementSet, NoiseModel, NoiseSpec, measure
from utils.helpers import derive_seed, make_rng
from .regions import sample_ball


def hessian_deviation(M: MeasurementSet, x) -> float:
    """||hess f(x) - E hess f(x)||_2 / (||x||^2 + ||x_bar||^2 / 3 + ||eps||_inf)."""
    x = np.asarray(x, dtype=float)
    model = ExpectedModel.from_measurements(M)
    diff = QuarticLoss(M).hessian(x) - expected_hessian(model, x)
    scale = float(np.dot(x, x)) + float(np.dot(M.truth, M.truth)) / 3.0 + M.noise_inf
    return float(np.linalg.norm(diff, 2)) / scale


def hessian_concentration(n: int, m: int, trials: int, seed: int, points: int = 5,
                          noise_mean: float = 0.0) -> np.ndarray:
    """
    Max normalized Hessian deviation over sampled points, one value per trial.

    Each trial draws a fresh Gaussian ensemble, a unit truth and uniform noise, then
    evaluates the deviation at points drawn from the ball of radius 2.
    """
    values = np.empty(trials)
    for trial in range(trials):
        rng = make_rng(seed, n, m, trial, "truth")
        truth = rng.standard_normal(n)
        truth /= np.linalg.norm(truth)
        E = gaussian_ensemble(n, m, derive_seed(seed, n, m, trial, "ensemble"))
        model = NoiseModel.UNIFORM_NONNEG if noise_mean > 0 else NoiseModel.NONE
        noise = NoiseSpec(model=model, target_mean=noise_mean,
                          seed=derive_seed(seed, n, m, trial, "noise"))
        M = measure(E, truth, noise)
        X = sample_ball(n, points, 2.0, make_rng(seed, n, m, trial, "samples"))
        values[trial] = max(hessian_deviation(M, x) for x in X)
    return values


def injectivity_margin(E: SensingEnsemble) -> float:
    """Smallest eigenvalue of (1/m) Re(A* A) on real vectors."""
    if isinstance(E, GaussianEnsemble):
        gram = E.matrix.T @ E.matrix / E.m
    else:
        gram = np.column_stack([E.adjoint_apply(E.apply(e)) for e in np.eye(E.n)]) / E.m
    return float(np.linalg.eigvalsh(0.5 * (gram + gram.T))[0])
