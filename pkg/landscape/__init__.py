"""
Landscape analysis of the expected objective.

Provides the SNR assumption check, the convergence constants, the critical-point
catalogue, region classification with a sampled covering check, and Monte-Carlo
Hessian concentration.
"""

from .assumptions import (
    LAMBDA_MIN,
    AssumptionError,
    SnrReport,
    LandscapeParams,
    snr_check,
    convergence_params,
    dist_argmin_bound,
    empirical_snr,
    linear_rate_envelope,
)
from .critical_points import (
    SaddleSphere,
    CriticalCatalogue,
    critical_catalogue,
    sample_saddle_points,
)
from .regions import (
    Region,
    CoveringReport,
    region_masks,
    classify_region,
    sample_ball,
    verify_covering,
)
from .concentration import hessian_deviation, hessian_concentration, injectivity_margin

__all__ = [
    'LAMBDA_MIN',
    'AssumptionError',
    'SnrReport',
    'LandscapeParams',
    'snr_check',
    'convergence_params',
    'dist_argmin_bound',
    'empirical_snr',
    'linear_rate_envelope',
    'SaddleSphere',
    'CriticalCatalogue',
    'critical_catalogue',
    'sample_saddle_points',
    'Region',
    'CoveringReport',
    'region_masks',
    'classify_region',
    'sample_ball',
    'verify_covering',
    'hessian_deviation',
    'hessian_concentration',
    'injectivity_margin',
]
