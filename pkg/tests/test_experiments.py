import asyncio
import json
import math

import numpy as np
import pandas as pd
import pytest

import app
from experiments import (
    ConfigError,
    ExperimentOrchestrator,
    build_config,
    decay_fit,
    get_experiment,
    load_config,
    parse_config_text,
    run_check_assumption,
)
from experiments.base_experiment import make_instance, mirror_config
from experiments.config_schema import NoiseSection
from persistence import PgmImage, get_run_ledger, read_pgm, write_pgm
from sensing import gaussian_ensemble
from solvers import Backtracking, ConstantStep


def _config(text, experiment, out):
    return build_config(parse_config_text(text), experiment, output_path=str(out))


def _run(config):
    return asyncio.run(get_experiment(config.experiment, config).execute())


R1D = """
[experiment]
seed = 5
trials = 2

[problem]
n = 16
m = 200

[solver]
max_iters = 50
record_every = 10
"""


def test_unknown_key_reports_line():
    text = "[experiment]\nseed = 3\n\n[problem]\nn = 16\nbogus = 2\n"
    with pytest.raises(ConfigError, match=r"line 6: unknown key 'bogus' in \[problem\]"):
        build_config(parse_config_text(text), "reconstruct1d")


def test_unknown_key_in_experiment_section():
    with pytest.raises(ConfigError, match=r"line 2: unknown key 'foo' in \[experiment\]"):
        build_config(parse_config_text("[experiment]\nfoo = 1\n"), "reconstruct1d")


def test_invalid_value_reports_line():
    with pytest.raises(ConfigError, match=r"line 3: \[problem\] n"):
        build_config(parse_config_text("# header\n[problem]\nn = abc\n"), "reconstruct1d")


@pytest.mark.parametrize("text,message", [
    ("[nope]\n", r"line 1: unknown section \[nope\]"),
    ("[problem]\nn 16\n", r"line 2: expected 'key = value'"),
    ("n = 3\n", r"line 1: key outside of any \[section\]"),
    ("[problem]\nn = 3\nn = 4\n", r"line 3: duplicate key 'n' in \[problem\] \(first set on line 2\)"),
])
def test_parse_errors(text, message):
    with pytest.raises(ConfigError, match=message):
        parse_config_text(text)


def test_experiment_name_mismatch():
    with pytest.raises(ConfigError, match="line 2"):
        build_config(parse_config_text("[experiment]\nname = cdpimage\n"), "reconstruct1d")


def test_invalid_algorithm_rejected():
    with pytest.raises(ConfigError):
        build_config(parse_config_text("[grid]\nalgorithms = md-random, adam\n"), "phasediagram")


def test_defaults_and_lists():
    text = "[grid]\nn_grid = 8, 12\nm_ratios = 2, 4.5\nalgorithms = md-random, wf-spectral\n"
    cfg = build_config(parse_config_text(text), "phasediagram", seed=9)
    assert cfg.grid.n_grid == [8, 12]
    assert cfg.grid.m_ratios == [2.0, 4.5]
    assert cfg.grid.algorithms == ["md-random", "wf-spectral"]
    assert cfg.seed == 9
    assert cfg.noise.target_mean == 1e-5


def test_default_measurement_counts():
    random_cfg = build_config(parse_config_text(""), "reconstruct1d")
    assert random_cfg.measurement_count() == math.ceil(128 * math.log(128) ** 2) == 3014
    spectral_cfg = build_config(parse_config_text("[experiment]\ninit = spectral\n"), "reconstruct1d")
    assert spectral_cfg.measurement_count() == math.ceil(5 * 128 * math.log(128))


def test_load_config(tmp_path):
    path = tmp_path / "r.ini"
    path.write_text(R1D)
    cfg = load_config(str(path), "reconstruct1d", seed=1, output_path=str(tmp_path / "out"))
    assert cfg.seed == 1
    assert cfg.problem.m == 200
    assert cfg.run.output_path == str(tmp_path / "out")
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.ini"), "reconstruct1d")
    with pytest.raises(ConfigError):
        load_config(None, "unknown")


def test_decay_fit_on_geometric_curve():
    errors = np.maximum(10.0 ** (-0.5 * np.arange(30)), 3e-9)
    fit = decay_fit(errors)
    assert fit["start"] == 1
    assert fit["end"] == 16
    assert fit["slope"] == pytest.approx(-0.5)
    assert fit["r_squared"] == pytest.approx(1.0)
    assert decay_fit([1.0, 0.5])["slope"] is None


def test_parallel_map_keeps_order():
    orchestrator = ExperimentOrchestrator(max_workers=3)
    assert asyncio.run(orchestrator.parallel_map(lambda x: x * x, range(10))) == [x * x for x in range(10)]


def test_reconstruct1d_outputs(tmp_path):
    summary = _run(_config(R1D, "reconstruct1d", tmp_path))
    assert summary["m"] == 200
    assert len(summary["trials"]) == 2
    frame = pd.read_csv(tmp_path / "trace_000.csv")
    assert list(frame.columns) == ["iter", "f", "rel_error", "L_k", "backtracks"]
    assert len(frame) == 51
    stored = json.loads((tmp_path / "summary.json").read_text())
    assert stored["trials"][1]["trace"] == "trace_001.csv"


def test_reconstruct1d_is_deterministic(tmp_path):
    _run(_config(R1D, "reconstruct1d", tmp_path / "a"))
    _run(_config(R1D, "reconstruct1d", tmp_path / "b"))
    for name in ("trace_000.csv", "trace_001.csv", "summary.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_reconstruct1d_backtracking_records_L(tmp_path):
    text = R1D + "policy = backtracking\n"
    _run(_config(text, "reconstruct1d", tmp_path))
    frame = pd.read_csv(tmp_path / "trace_000.csv")
    assert frame["L_k"].iloc[1:].notna().all()
    assert (frame["backtracks"] >= 0).all()


PHASE = """
[experiment]
seed = 3
trials = 2

[solver]
max_iters = 100

[grid]
n_grid = 8
m_ratios = 4, 8
"""


def test_phase_diagram_grid(tmp_path):
    _run(_config(PHASE, "phasediagram", tmp_path / "a"))
    grid = pd.read_csv(tmp_path / "a" / "grid.csv")
    assert list(grid.columns) == ["algorithm", "n", "m", "trials", "successes", "median_rel_error"]
    assert len(grid) == 6
    assert list(grid["m"]) == [32, 32, 32, 64, 64, 64]
    assert (grid["trials"] == 2).all()
    assert ((grid["successes"] >= 0) & (grid["successes"] <= 2)).all()
    assert len(pd.read_csv(tmp_path / "a" / "runs.csv")) == 12

    _run(_config(PHASE, "phasediagram", tmp_path / "b"))
    assert (tmp_path / "a" / "grid.csv").read_bytes() == (tmp_path / "b" / "grid.csv").read_bytes()


def test_phase_diagram_explicit_m_grid(tmp_path):
    text = PHASE + "m_grid = 20, 10\nalgorithms = md-spectral\n"
    _run(_config(text, "phasediagram", tmp_path))
    grid = pd.read_csv(tmp_path / "grid.csv")
    assert list(grid["m"]) == [10, 20]



def test_phase_diagram_counts_divergent_runs_as_failures(tmp_path):
    text = PHASE + "algorithms = md-spectral\n"
    text = text.replace("max_iters = 100", "max_iters = 1000\npolicy = constant\ngamma = 50")
    _run(_config(text, "phasediagram", tmp_path))
    grid = pd.read_csv(tmp_path / "grid.csv")
    assert (grid["successes"] == 0).all()
    assert np.isinf(grid["median_rel_error"]).all()


def test_mirror_config_policy_defaults(tmp_path):
    cfg = _config(PHASE, "phasediagram", tmp_path)
    assert cfg.solver.policy is None
    assert isinstance(mirror_config(cfg.solver, 0.3, 10, default_policy="backtracking").step_policy, Backtracking)
    assert mirror_config(cfg.solver, 0.3, 10).step_policy == ConstantStep(0.3)
    explicit = _config(PHASE.replace("max_iters = 100", "policy = constant"), "phasediagram", tmp_path)
    assert isinstance(mirror_config(explicit.solver, 0.3, 10, default_policy="backtracking").step_policy,
                      ConstantStep)


def test_instances_are_nested_in_m():
    noise = NoiseSection(model="uniform_nonneg", target_mean=1e-3)
    small = make_instance(lambda s: gaussian_ensemble(8, 16, s), 8, noise, 1.0, 4, 8, 0).measurements
    large = make_instance(lambda s: gaussian_ensemble(8, 40, s), 8, noise, 1.0, 4, 8, 0).measurements
    np.testing.assert_array_equal(large.ensemble.matrix[:16], small.ensemble.matrix)
    np.testing.assert_array_equal(large.truth, small.truth)
    np.testing.assert_array_equal(large.noise[:16], small.noise)


CDP = """
[image]
size = 8
masks = 4

[solver]
max_iters = 20
"""


def test_cdp_image_on_phantom(tmp_path):
    summary = _run(_config(CDP, "cdpimage", tmp_path))
    recovered = read_pgm(tmp_path / "recovered.pgm")
    assert recovered.shape == (8, 8)
    assert recovered.maxval == 255
    assert summary["iterations"] == 20
    assert np.isfinite(summary["rel_error"])


def test_cdp_image_keeps_input_geometry(tmp_path):
    pixels = np.random.default_rng(0).integers(0, 1001, size=(6, 5))
    source = write_pgm(tmp_path / "in.pgm", PgmImage(pixels, 1000), binary=False)
    cfg = _config(f"[image]\npath = {source}\nmasks = 4\n\n[solver]\nmax_iters = 5\n", "cdpimage",
                  tmp_path / "out")
    _run(cfg)
    recovered = read_pgm(tmp_path / "out" / "recovered.pgm")
    assert recovered.shape == (6, 5)
    assert recovered.maxval == 1000


LANDSCAPE = """
[landscape]
n = 2
samples = 2000
saddle_samples = 5
points = 2
m_factors = 10
concentration_trials = 2
"""


def test_landscape_verify_report(tmp_path, capsys):
    report = _run(_config(LANDSCAPE, "landscape-verify", tmp_path))
    assert report["covering"]["uncovered_count"] == 0
    assert report["catalogue"]["max_grad_norm"] <= 1e-10
    assert report["catalogue"]["origin_negative_definite"]
    assert report["catalogue"]["minimizer_curvature_ok"]
    assert report["catalogue"]["saddles_mixed_signature"]
    out = capsys.readouterr().out
    assert "covering.uncovered_count=0" in out
    assert "catalogue.origin_negative_definite=true" in out
    assert (tmp_path / "landscape_report.json").exists()


def test_check_assumption_report(tmp_path, capsys):
    report = _run(_config("[problem]\nn = 16\nm = 200\n", "check-assumption", tmp_path))
    assert report["pass"] is True
    assert "params" in report
    out = capsys.readouterr().out
    assert "pass=true" in out
    assert "params.sigma=" in out


def test_check_assumption_reports_failure(tmp_path, capsys):
    text = "[problem]\nn = 16\nm = 200\n\n[noise]\ntarget_mean = 0.9\n"
    report = _run(_config(text, "check-assumption", tmp_path))
    assert report["pass"] is False
    assert "params" not in report
    assert "pass=false" in capsys.readouterr().out


def test_run_entry_point_matches_registry(tmp_path):
    config = _config("[problem]\nn = 16\nm = 200\n", "check-assumption", tmp_path / "a")
    direct = asyncio.run(run_check_assumption(config))
    assert direct == _run(_config("[problem]\nn = 16\nm = 200\n", "check-assumption", tmp_path / "b"))


def test_cli_success_and_ledger(tmp_path):
    config = tmp_path / "c.ini"
    config.write_text("[problem]\nn = 16\nm = 200\n")
    ledger = tmp_path / "ledger.db"
    code = app.main(["check-assumption", "--config", str(config), "--out", str(tmp_path / "out"),
                     "--ledger", str(ledger)])
    assert code == 0
    assert (tmp_path / "out" / "snr_report.json").exists()
    runs = get_run_ledger(str(ledger)).get_recent_runs()
    assert runs[0]["experiment"] == "check-assumption"
    assert runs[0]["status"] == "completed"


def test_cli_config_error(tmp_path):
    config = tmp_path / "bad.ini"
    config.write_text("[problem]\nwidth = 3\n")
    assert app.main(["reconstruct1d", "--config", str(config), "--out", str(tmp_path)]) == 2


def test_cli_numerical_abort(tmp_path):
    config = tmp_path / "abort.ini"
    config.write_text(
        "[problem]\nn = 4\nm = 16\n\n[solver]\npolicy = backtracking\nL0 = 1e-8\nxi = 1\nmax_iters = 3\n"
    )
    assert app.main(["reconstruct1d", "--config", str(config), "--out", str(tmp_path)]) == 3


def test_cli_divergence_exits_with_numerical_abort(tmp_path):
    config = tmp_path / "diverge.ini"
    config.write_text("[problem]\nn = 4\nm = 16\n\n[solver]\ngamma = 50\nmax_iters = 1000\n")
    assert app.main(["reconstruct1d", "--config", str(config), "--out", str(tmp_path)]) == 3


def test_cli_rejects_unknown_experiment():
    with pytest.raises(SystemExit):
        app.main(["nonsense"])
