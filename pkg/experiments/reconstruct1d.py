"""
experiments/reconstruct1d.py

1-D Gaussian reconstruction: one trace CSV per trial plus a summary with the
final errors and a log-linear fit of the decaying part of each error curve.
"""

from typing import Any, Dict, Optional

import numpy as np
from scipy import stats

from metrics.errors import gate_sigma, success_threshold
from persistence.traces import write_summary_json, write_trace_csv
from sensing.gaussian_ensemble import gaussian_ensemble
from solvers.mirror_descent import mirror_descent
from utils.helpers import derive_seed
from .base_experiment import BaseExperiment, initial_point, make_instance, mirror_config

DEFAULT_ITERS = 5000
GATE_FACTOR = 10.0
DECAY_START = 0.5


def decay_fit(rel_errors) -> Dict[str, Optional[float]]:
    """
    Fit log10(rel_error) against the iteration index on the decaying segment.

    The segment starts at the first error <= 0.5 and ends before the error
    first comes within a factor 10 of its minimum.
    """
    e = np.asarray(rel_errors, dtype=float)
    e = np.where(np.isfinite(e), e, np.nan)
    positive = e[e > 0]
    if positive.size < 3:
        return {"slope": None, "r_squared": None, "start": None, "end": None}

    floor = float(np.nanmin(positive))
    below = np.flatnonzero(e <= DECAY_START)
    near_floor = np.flatnonzero(e <= 10.0 * floor)
    start = int(below[0]) if below.size else 0
    end = int(near_floor[0]) if near_floor.size else e.size
    if end - start < 3:
        return {"slope": None, "r_squared": None, "start": start, "end": end}

    iters = np.arange(start, end)
    fit = stats.linregress(iters, np.log10(e[start:end]))
    return {"slope": float(fit.slope), "r_squared": float(fit.rvalue ** 2),
            "start": start, "end": end}


class Reconstruct1DExperiment(BaseExperiment):
    name = "reconstruct1d"

    async def execute(self) -> Dict[str, Any]:
        cfg = self.config
        n = cfg.problem.n
        m = cfg.measurement_count()
        gamma = 0.99 / (3.0 + cfg.noise.target_mean)
        solver_cfg = mirror_config(cfg.solver, default_gamma=gamma, default_iters=DEFAULT_ITERS)
        self.log_action("configured", {"n": n, "m": m, "trials": cfg.run.trials, "init": cfg.run.init})

        trials = []
        for trial in range(cfg.run.trials):
            instance = make_instance(lambda s: gaussian_ensemble(n, m, s), n, cfg.noise,
                                     cfg.problem.signal_norm, cfg.seed, trial)
            M = instance.measurements
            x0 = initial_point(cfg.run.init, M, derive_seed(cfg.seed, trial, "init"))
            trace = mirror_descent(M, x0, solver_cfg)
            path = write_trace_csv(trace, self.output_dir / f"trace_{trial:03d}.csv")

            sigma = gate_sigma(M.truth, M.noise_mean, cfg.grid.gate_lambda)
            threshold = success_threshold(M.noise, m, sigma)
            fit = decay_fit(trace.rel_errors)
            trials.append({
                "trial": trial,
                "trace": path.name,
                "final_rel_error": trace.final_rel_error,
                "iterations": trace.iterations_run,
                "threshold": threshold,
                "within_gate": bool(trace.final_rel_error <= GATE_FACTOR * threshold),
                "decay_slope": fit["slope"],
                "decay_r_squared": fit["r_squared"],
            })
            self.log_action("trial_finished", {"trial": trial, "rel_error": trace.final_rel_error})

        summary = {
            "experiment": self.name,
            "n": n,
            "m": m,
            "init": cfg.run.init,
            "policy": cfg.solver.policy or "constant",
            "trials": trials,
            "successes": int(sum(t["within_gate"] for t in trials)),
        }
        write_summary_json(summary, self.output_dir / "summary.json")
        return summary
