"""
experiments/base_experiment.py

Shared plumbing for the experiment runners: seeded problem instances, solver
configuration from the [solver] section, and initial points.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np

from config import MirrorPRConfig
from data.synthetic import random_unit_signal
from persistence.run_ledger import RunLedger
from sensing.base_ensemble import SensingEnsemble
from sensing.measurements import MeasurementSet, NoiseModel, NoiseSpec, measure
from solvers.base_solver import (
    Backtracking,
    ConstantStep,
    SolverConfig,
    WirtingerSchedule,
    random_initialization,
)
from spectral.initializer import spectral_init
from utils.helpers import derive_seed
from utils.logging_config import get_logger
from .config_schema import ExperimentConfig, NoiseSection, SolverSection


def noise_spec(section: NoiseSection, seed: int) -> NoiseSpec:
    return NoiseSpec(
        model=NoiseModel(section.model),
        target_mean=section.target_mean if section.model != "none" else 0.0,
        seed=seed,
        half_width=section.half_width,
    )


def mirror_config(section: SolverSection, default_gamma: float, default_iters: int,
                  default_policy: str = "constant") -> SolverConfig:
    if (section.policy or default_policy) == "backtracking":
        policy = Backtracking(L0=section.L0, kappa=section.kappa, xi=section.xi)
    else:
        policy = ConstantStep(section.gamma if section.gamma is not None else default_gamma)
    return SolverConfig(
        step_policy=policy,
        max_iters=section.max_iters or default_iters,
        grad_tol=section.grad_tol,
        record_every=section.record_every,
    )


def wirtinger_config(section: SolverSection, default_iters: int) -> SolverConfig:
    policy = WirtingerSchedule() if section.mu_schedule else ConstantStep(section.mu)
    return SolverConfig(
        step_policy=policy,
        max_iters=section.max_iters or default_iters,
        grad_tol=section.grad_tol,
        record_every=section.record_every,
    )


def initial_point(init: str, M: MeasurementSet, seed: int) -> np.ndarray:
    if init == "spectral":
        return spectral_init(M, MirrorPRConfig.POWER_ITERS, seed).x0
    return random_initialization(M.n, seed)


@dataclass
class Instance:
    measurements: MeasurementSet
    seeds: Dict[str, int]


def make_instance(ensemble_factory, n: int, noise: NoiseSection, signal_norm: float,
                  seed: int, *keys: Any) -> Instance:
    """Draw (ensemble, truth, noise) from substreams of (seed, *keys)."""
    seeds = {purpose: derive_seed(seed, *keys, purpose) for purpose in ("ensemble", "truth", "noise")}
    E: SensingEnsemble = ensemble_factory(seeds["ensemble"])
    truth = random_unit_signal(n, seeds["truth"], norm=signal_norm)
    M = measure(E, truth, noise_spec(noise, seeds["noise"]))
    return Instance(measurements=M, seeds=seeds)


class BaseExperiment(ABC):
    """Base class for configuration-driven experiments"""

    name: str = ""

    def __init__(self, config: ExperimentConfig, ledger: Optional[RunLedger] = None,
                 runtime: Optional[MirrorPRConfig] = None):
        self.config = config
        self.ledger = ledger
        self.runtime = runtime or MirrorPRConfig()
        self.logger = get_logger(f"experiment.{self.name}")

    @property
    def output_dir(self) -> Path:
        base = self.config.run.output_path or self.runtime.OUTPUT_DIR
        return Path(base)

    @abstractmethod
    async def execute(self) -> Dict[str, Any]:
        """Run the experiment, write its outputs and return a summary"""
        pass

    def log_action(self, action: str, details: Dict[str, Any]):
        """Log experiment actions for observability"""
        self.logger.info(f"{self.name}: {action}", extra=details)
        if self.ledger is not None:
            self.ledger.log_event(self.name, action, details)
