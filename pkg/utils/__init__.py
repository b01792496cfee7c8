"""
Shared utilities for mirror-pr.

Provides:
- Logging configuration
- Argument validation
- Seed derivation and formatting helpers
"""

from .logging_config import (
    setup_logging,
    get_logger,
    log_execution_time,
)
from .validators import (
    validate_vector,
    validate_same_length,
    validate_positive,
    validate_open_interval,
    validate_finite,
    ValidationError,
    DimensionMismatchError,
)
from .helpers import (
    derive_seed,
    make_rng,
    format_number,
    config_digest,
)

__all__ = [
    # Logging
    'setup_logging',
    'get_logger',
    'log_execution_time',
    # Validation
    'validate_vector',
    'validate_same_length',
    'validate_positive',
    'validate_open_interval',
    'validate_finite',
    'ValidationError',
    'DimensionMismatchError',
    # Helpers
    'derive_seed',
    'make_rng',
    'format_number',
    'config_digest',
]
