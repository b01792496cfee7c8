import numpy as np
import pytest

from data.synthetic import random_unit_signal
from sensing import NoiseModel, NoiseSpec, cdp_ensemble, gaussian_ensemble, measure


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def gaussian_measurements():
    """Noisy Gaussian instance, n=8, m=64."""
    E = gaussian_ensemble(8, 64, seed=11)
    truth = random_unit_signal(8, seed=12)
    return measure(E, truth, NoiseSpec(NoiseModel.UNIFORM_NONNEG, target_mean=1e-3, seed=13))


@pytest.fixture
def cdp_measurements():
    """Noisy CDP instance, n=8, P=6."""
    E = cdp_ensemble(8, 6, seed=21)
    truth = random_unit_signal(8, seed=22)
    return measure(E, truth, NoiseSpec(NoiseModel.UNIFORM_NONNEG, target_mean=1e-3, seed=23))


@pytest.fixture(params=["gaussian", "cdp"])
def measurements(request, gaussian_measurements, cdp_measurements):
    return gaussian_measurements if request.param == "gaussian" else cdp_measurements
