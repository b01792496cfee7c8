import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from bregman import bregman_psi
from config import MirrorPRConfig
from data.synthetic import random_unit_signal
from landscape import convergence_params
from objective import bregman_f, crude_smoothness_bound, f_value
from sensing import NoiseModel, NoiseSpec, cdp_ensemble, gaussian_ensemble, measure
from solvers import (
    Backtracking,
    BacktrackingError,
    ConstantStep,
    MirrorDescentSolver,
    NonFiniteError,
    SolverConfig,
    SolverError,
    StopReason,
    WirtingerFlowSolver,
    WirtingerSchedule,
    get_solver,
    mirror_descent,
    mirror_step,
    random_initialization,
    wirtinger_flow,
)
from spectral import spectral_init
from utils.validators import ValidationError

NOISE = NoiseSpec(NoiseModel.UNIFORM_NONNEG, target_mean=1e-3, seed=0)


def _gaussian(n, m, seed, noise=NOISE):
    E = gaussian_ensemble(n, m, seed)
    return measure(E, random_unit_signal(n, seed + 1), noise)


def _cdp(n, P, seed, noise=NOISE):
    E = cdp_ensemble(n, P, seed)
    return measure(E, random_unit_signal(n, seed + 1), noise)


def test_mirror_step_examples():
    x = np.array([0.3, -0.4])
    assert_allclose(mirror_step(x, 0.5, np.zeros(2)), x, rtol=1e-10)
    assert_allclose(mirror_step(np.zeros(2), 1.0, np.array([-2.0, 0.0])), [1.0, 0.0], rtol=1e-12)


def test_one_step_decreases_objective_with_safe_constant():
    kappa = 0.01
    for seed in range(100):
        M = _gaussian(4, 32, 3 * seed)
        L = crude_smoothness_bound(M.ensemble, M.noise_inf)
        x0 = random_initialization(4, seed)
        trace = mirror_descent(M, x0, SolverConfig(ConstantStep((1 - kappa) / L), max_iters=1))
        assert trace.f_values[1] <= trace.f_values[0] + 1e-12


@pytest.mark.parametrize("kind", ["gaussian", "cdp"])
def test_backtracking_monotone_and_accepted(kind):
    cfg = SolverConfig(Backtracking(), max_iters=200, record_every=1)
    for seed in range(25):
        M = _gaussian(8, 64, 7 * seed) if kind == "gaussian" else _cdp(8, 6, 7 * seed)
        trace = mirror_descent(M, random_initialization(8, seed + 100), cfg)
        f = np.asarray(trace.f_values)
        assert np.all(np.diff(f) <= 1e-12)
        xi = cfg.step_policy.xi
        for k in range(trace.iterations_run):
            x, x_next = trace.iterates[k], trace.iterates[k + 1]
            lhs = bregman_f(M, x_next, x)
            assert lhs <= xi * trace.L_history[k + 1] * bregman_psi(x_next, x) + 2e-12


def test_constant_step_monotone_with_crude_bound(cdp_measurements):
    M = cdp_measurements
    gamma = 0.99 / crude_smoothness_bound(M.ensemble, M.noise_inf)
    trace = mirror_descent(M, random_initialization(M.n, 5), SolverConfig(ConstantStep(gamma), max_iters=300))
    f = np.asarray(trace.f_values)
    assert np.all(np.diff(f) <= 1e-12)
    assert np.all(np.isnan(trace.L_history))


def test_stops_immediately_at_critical_point(gaussian_measurements):
    M = gaussian_measurements
    trace = mirror_descent(M, np.zeros(M.n), SolverConfig(max_iters=50))
    assert trace.stop_reason is StopReason.GRAD_TOL
    assert trace.iterations_run == 0
    assert_array_equal(trace.final, np.zeros(M.n))
    assert len(trace.f_values) == 1


def test_wirtinger_flow_stops_at_noiseless_truth():
    M = _gaussian(6, 60, 9, noise=NoiseSpec.none())
    trace = wirtinger_flow(M, M.truth, SolverConfig(ConstantStep(0.1), max_iters=10))
    assert trace.stop_reason is StopReason.GRAD_TOL
    assert_array_equal(trace.final, M.truth)


@pytest.mark.parametrize("policy", [ConstantStep(0.05), Backtracking()])
def test_sign_equivariance(measurements, policy):
    cfg = SolverConfig(policy, max_iters=100, record_every=10)
    x0 = random_initialization(measurements.n, 17)
    plus = mirror_descent(measurements, x0, cfg)
    minus = mirror_descent(measurements, -x0, cfg)
    assert_array_equal(minus.final, -plus.final)
    assert plus.f_values == minus.f_values
    assert plus.rel_errors == minus.rel_errors


def test_noiseless_spectral_mirror_descent_converges():
    n = 128
    m = math.ceil(5 * n * math.log(n))
    M = _gaussian(n, m, 2024, noise=NoiseSpec.none())
    x0 = spectral_init(M, seed=1).x0
    trace = mirror_descent(M, x0, SolverConfig(ConstantStep(0.99 / 3.0), max_iters=500))
    assert trace.final_rel_error < 1e-7


def test_noiseless_wirtinger_flow_converges():
    M = _gaussian(64, 640, 77, noise=NoiseSpec.none())
    x0 = spectral_init(M, seed=2).x0
    trace = wirtinger_flow(M, x0, SolverConfig(ConstantStep(0.1), max_iters=2000))
    assert trace.final_rel_error < 1e-5


def test_local_linear_rate_beats_half_of_theory():
    n, m = 32, 40 * 32
    M = _gaussian(n, m, 31, noise=NoiseSpec.none())
    gamma = 0.99 / 3.0
    params = convergence_params(M.truth, np.zeros(m), lam=0.5, varrho=1e-3, kappa=0.01, m=m)
    trace = mirror_descent(M, spectral_init(M, seed=3).x0, SolverConfig(ConstantStep(gamma), max_iters=300))
    dist_sq = np.asarray(trace.rel_errors) ** 2
    below = np.flatnonzero(dist_sq < 1e-24)
    K = int(below[0]) if below.size else len(dist_sq) - 1
    assert K >= 1
    empirical = (dist_sq[K] / dist_sq[0]) ** (1.0 / K)
    assert empirical <= 1 - gamma * params.sigma / 2


def test_backtracking_gives_up():
    M = _gaussian(4, 16, 5)
    cfg = SolverConfig(Backtracking(L0=1e-8, xi=1.0), max_iters=5)
    with pytest.raises(BacktrackingError):
        mirror_descent(M, random_initialization(4, 0), cfg)


@pytest.mark.parametrize("policy", [ConstantStep(0.3), Backtracking()])
def test_divergent_mirror_step_raises_solver_error(policy):
    M = _gaussian(4, 16, 6)
    x0 = 1e60 * random_initialization(4, 2)
    with pytest.raises(SolverError):
        mirror_descent(M, x0, SolverConfig(policy, max_iters=5))


def test_mirror_step_overflow_is_non_finite():
    x = np.array([1e150, 0.0])
    with pytest.raises(NonFiniteError):
        mirror_step(x, 0.1, np.array([-1e160, 0.0]))


def test_backtracking_cap_counts_trials(monkeypatch):
    class CountingSolver(MirrorDescentSolver):
        calls = 0

        def _evaluate(self, loss, x):
            CountingSolver.calls += 1
            return super()._evaluate(loss, x)

    monkeypatch.setattr(MirrorPRConfig, "BACKTRACK_MAX_TRIALS", 3)
    solver = CountingSolver(SolverConfig(Backtracking(L0=1e-8, xi=1.0), max_iters=5))
    with pytest.raises(BacktrackingError):
        solver.run(_gaussian(4, 16, 5), random_initialization(4, 0))
    assert CountingSolver.calls == 1 + 3


def test_non_finite_objective_aborts():
    M = _gaussian(4, 16, 6)
    with pytest.raises(NonFiniteError):
        wirtinger_flow(M, np.full(4, 1e200), SolverConfig(ConstantStep(0.1), max_iters=5))


def test_iterates_kept_on_schedule(gaussian_measurements):
    cfg = SolverConfig(ConstantStep(0.1), max_iters=250, record_every=100)
    trace = mirror_descent(gaussian_measurements, random_initialization(8, 1), cfg)
    assert trace.recorded_iters == [0, 100, 200, 250]
    assert len(trace.f_values) == 251
    assert_array_equal(trace.iterates[-1], trace.final)
    assert trace.summary()["iterations_run"] == 250


def test_trace_values_match_objective(gaussian_measurements):
    cfg = SolverConfig(ConstantStep(0.2), max_iters=20, record_every=5)
    trace = mirror_descent(gaussian_measurements, random_initialization(8, 2), cfg)
    for k, x in zip(trace.recorded_iters, trace.iterates):
        assert trace.f_values[k] == f_value(gaussian_measurements, x)


def test_wirtinger_schedule():
    schedule = WirtingerSchedule()
    assert schedule.mu(1) == pytest.approx(1 - np.exp(-1 / 330))
    assert schedule.mu(10_000) == 0.2


def test_policy_validation():
    with pytest.raises(ValidationError):
        MirrorDescentSolver(SolverConfig(WirtingerSchedule()))
    with pytest.raises(ValidationError):
        WirtingerFlowSolver(SolverConfig(Backtracking()))
    with pytest.raises(ValidationError):
        ConstantStep(0.0)
    with pytest.raises(ValidationError):
        Backtracking(kappa=1.0)
    with pytest.raises(ValidationError):
        SolverConfig(max_iters=0)


def test_wirtinger_flow_rejects_zero_start(gaussian_measurements):
    with pytest.raises(ValidationError):
        wirtinger_flow(gaussian_measurements, np.zeros(8), SolverConfig(ConstantStep(0.1)))


def test_random_initialization():
    x = random_initialization(10, 3, radius=2.0)
    assert np.linalg.norm(x) == pytest.approx(2.0)
    assert_array_equal(x, random_initialization(10, 3, radius=2.0))


def test_get_solver():
    assert isinstance(get_solver("mirror_descent", SolverConfig()), MirrorDescentSolver)
    with pytest.raises(ValueError):
        get_solver("adam", SolverConfig())
