"""
Configuration-driven experiments.

Provides the five experiment runners, the configuration schema and the
orchestrator that executes them.
"""

from .config_schema import ExperimentConfig, ConfigError, load_config, parse_config_text, build_config
from .base_experiment import BaseExperiment
from .orchestrator import ExperimentOrchestrator
from .reconstruct1d import Reconstruct1DExperiment, decay_fit
from .phase_diagram import PhaseDiagramExperiment, PhaseDiagramCell
from .cdp_image import CDPImageExperiment
from .landscape_verify import LandscapeVerifyExperiment
from .check_assumption import CheckAssumptionExperiment

# Experiment registry for the command line
AVAILABLE_EXPERIMENTS = {
    'reconstruct1d': Reconstruct1DExperiment,
    'phasediagram': PhaseDiagramExperiment,
    'cdpimage': CDPImageExperiment,
    'landscape-verify': LandscapeVerifyExperiment,
    'check-assumption': CheckAssumptionExperiment,
}


def get_experiment(experiment_name: str, config: ExperimentConfig, **kwargs) -> BaseExperiment:
    """Factory function to instantiate experiments by name."""
    if experiment_name not in AVAILABLE_EXPERIMENTS:
        raise ValueError(f"Unknown experiment: {experiment_name}. Available: {list(AVAILABLE_EXPERIMENTS.keys())}")
    return AVAILABLE_EXPERIMENTS[experiment_name](config, **kwargs)


def run_reconstruct1d(config: ExperimentConfig, **kwargs):
    return Reconstruct1DExperiment(config, **kwargs).execute()


def run_phasediagram(config: ExperimentConfig, **kwargs):
    return PhaseDiagramExperiment(config, **kwargs).execute()


def run_cdpimage(config: ExperimentConfig, **kwargs):
    return CDPImageExperiment(config, **kwargs).execute()


def run_landscape_verify(config: ExperimentConfig, **kwargs):
    return LandscapeVerifyExperiment(config, **kwargs).execute()


def run_check_assumption(config: ExperimentConfig, **kwargs):
    return CheckAssumptionExperiment(config, **kwargs).execute()


__all__ = [
    'ExperimentConfig',
    'ConfigError',
    'load_config',
    'parse_config_text',
    'build_config',
    'BaseExperiment',
    'ExperimentOrchestrator',
    'Reconstruct1DExperiment',
    'PhaseDiagramExperiment',
    'PhaseDiagramCell',
    'CDPImageExperiment',
    'LandscapeVerifyExperiment',
    'CheckAssumptionExperiment',
    'decay_fit',
    'AVAILABLE_EXPERIMENTS',
    'get_experiment',
    'run_reconstruct1d',
    'run_phasediagram',
    'run_cdpimage',
    'run_landscape_verify',
    'run_check_assumption',
]
