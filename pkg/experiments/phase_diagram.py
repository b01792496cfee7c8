"""
experiments/phase_diagram.py

Empirical success probability over an (n, m) grid for mirror descent from a
random start, mirror descent from the spectral start, and Wirtinger flow from the
spectral start. Every (n, m, trial) has one instance that all algorithms share.
Instances are nested in m: a trial draws its truth, sensing rows, noise and
initial points from substreams of (seed, n, trial), and the cell at m keeps the
first m rows and noise values, so neighbouring cells differ only by measurements.
Mirror descent backtracks on the relative smoothness constant unless [solver]
sets a policy.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np
import pandas as pd

from config import MirrorPRConfig
from metrics.errors import gate_sigma, relative_error, success_threshold
from persistence.traces import write_frame_csv, write_grid_csv, write_summary_json
from sensing.gaussian_ensemble import gaussian_ensemble
from solvers.base_solver import SolverError, random_initialization
from solvers.mirror_descent import mirror_descent
from solvers.wirtinger_flow import wirtinger_flow
from spectral.initializer import spectral_init
from utils.helpers import derive_seed
from utils.logging_config import log_execution_time
from .base_experiment import BaseExperiment, make_instance, mirror_config, wirtinger_config
from .orchestrator import ExperimentOrchestrator

DEFAULT_ITERS = 2500


@dataclass
class PhaseDiagramCell:
    algorithm: str
    n: int
    m: int
    trials: int
    successes: int
    median_rel_error: float

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError(f"successes={self.successes} outside [0, {self.trials}]")


@dataclass(frozen=True)
class TrialOutcome:
    algorithm: str
    n: int
    m: int
    trial: int
    rel_error: float
    success: bool


class PhaseDiagramExperiment(BaseExperiment):
    name = "phasediagram"

    def grid_points(self) -> List[Tuple[int, int]]:
        grid = self.config.grid
        points = []
        for n in grid.n_grid:
            ms = grid.m_grid if grid.m_grid else [max(1, int(round(r * n))) for r in grid.m_ratios]
            points.extend((n, m) for m in sorted(set(ms)))
        return points

    @log_execution_time()
    def run_trial(self, item: Tuple[int, int, int]) -> List[TrialOutcome]:
        """Solve one shared instance with every configured algorithm."""
        n, m, trial = item
        cfg = self.config
        seed = cfg.seed
        instance = make_instance(lambda s: gaussian_ensemble(n, m, s), n, cfg.noise,
                                 cfg.problem.signal_norm, seed, n, trial)
        M = instance.measurements
        threshold = success_threshold(M.noise, m, gate_sigma(M.truth, M.noise_mean, cfg.grid.gate_lambda))
        md_cfg = mirror_config(cfg.solver, 0.99 / (3.0 + cfg.noise.target_mean), DEFAULT_ITERS,
                               default_policy="backtracking")
        wf_cfg = wirtinger_config(cfg.solver, DEFAULT_ITERS)

        outcomes = []
        for algorithm in cfg.grid.algorithms:
            init_seed = derive_seed(seed, n, trial, algorithm)
            try:
                if algorithm == "md-random":
                    x0 = random_initialization(n, init_seed)
                else:
                    x0 = spectral_init(M, MirrorPRConfig.POWER_ITERS, init_seed).x0
                if algorithm.startswith("wf"):
                    trace = wirtinger_flow(M, x0, wf_cfg)
                else:
                    trace = mirror_descent(M, x0, md_cfg)
                rel = relative_error(trace.final, M.truth)
            except SolverError as e:
                self.logger.warning(f"{algorithm} failed at n={n}, m={m}, trial={trial}: {e}")
                rel = np.inf
            outcomes.append(TrialOutcome(algorithm, n, m, trial, float(rel), bool(rel < threshold)))
        return outcomes

    async def execute(self) -> Dict[str, Any]:
        cfg = self.config
        trials = cfg.run.trials
        items = [(n, m, t) for n, m in self.grid_points() for t in range(trials)]
        self.log_action("configured", {"cells": len(items) // trials, "trials": trials,
                                       "algorithms": list(cfg.grid.algorithms)})

        orchestrator = ExperimentOrchestrator(max_workers=self.runtime.MAX_WORKERS)
        results = await orchestrator.parallel_map(self.run_trial, items)
        outcomes = [o for batch in results for o in batch]

        runs = pd.DataFrame([o.__dict__ for o in outcomes])
        runs = runs.sort_values(["n", "m", "algorithm", "trial"], kind="mergesort").reset_index(drop=True)
        cells = []
        for (n, m, algorithm), group in runs.groupby(["n", "m", "algorithm"], sort=True):
            cells.append(PhaseDiagramCell(
                algorithm=str(algorithm),
                n=int(n),
                m=int(m),
                trials=int(len(group)),
                successes=int(group["success"].sum()),
                median_rel_error=float(np.median(group["rel_error"])),
            ))

        grid_path = write_grid_csv(cells, self.output_dir / "grid.csv")
        runs_path = write_frame_csv(runs, self.output_dir / "runs.csv")

        summary = {
            "experiment": self.name,
            "grid": grid_path.name,
            "runs": runs_path.name,
            "cells": [c.__dict__ for c in cells],
        }
        write_summary_json(summary, self.output_dir / "summary.json")
        self.log_action("finished", {"cells": len(cells)})
        return summary
