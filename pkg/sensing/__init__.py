"""
Sensing ensembles and intensity measurements.

Provides Gaussian and coded-diffraction-pattern operators with their adjoints,
noise models, and the measurement set consumed by the objective and solvers.
"""

from .base_ensemble import SensingEnsemble, EnsembleKind, apply, adjoint_apply
from .gaussian_ensemble import GaussianEnsemble, gaussian_ensemble
from .cdp_ensemble import CDPEnsemble, cdp_ensemble
from .measurements import NoiseModel, NoiseSpec, MeasurementSet, measure

# Ensemble registry for configuration-driven construction
AVAILABLE_ENSEMBLES = {
    'gaussian': gaussian_ensemble,
    'cdp': cdp_ensemble,
}


def get_ensemble(kind: str, **kwargs) -> SensingEnsemble:
    """Factory function to build an ensemble by kind name."""
    if kind not in AVAILABLE_ENSEMBLES:
        raise ValueError(f"Unknown ensemble: {kind}. Available: {list(AVAILABLE_ENSEMBLES.keys())}")
    return AVAILABLE_ENSEMBLES[kind](**kwargs)


__all__ = [
    'SensingEnsemble',
    'EnsembleKind',
    'GaussianEnsemble',
    'CDPEnsemble',
    'gaussian_ensemble',
    'cdp_ensemble',
    'apply',
    'adjoint_apply',
    'NoiseModel',
    'NoiseSpec',
    'MeasurementSet',
    'measure',
    'AVAILABLE_ENSEMBLES',
    'get_ensemble',
]
