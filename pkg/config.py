import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


def _env_flag(name: str, default: bool = False) -> bool:
    """Return True if the environment flag is set to a truthy value."""
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


@dataclass
class MirrorPRConfig:
    """Central runtime configuration for mirror-pr"""

    # Logging
    LOG_LEVEL: str = os.getenv("MIRROR_PR_LOG_LEVEL", "INFO")

    # Output and run ledger
    OUTPUT_DIR: str = os.getenv("MIRROR_PR_OUTPUT_DIR", "./results")
    LEDGER_PATH: str = os.getenv("MIRROR_PR_LEDGER", "")
    ENABLE_LEDGER: bool = _env_flag("MIRROR_PR_ENABLE_LEDGER", default=False)

    # Parallel phase-diagram cells
    MAX_WORKERS: int = int(os.getenv("MIRROR_PR_MAX_WORKERS", "4"))

    # Numerical limits
    DENSE_HESSIAN_MAX_N: int = 512
    BACKTRACK_MAX_TRIALS: int = 200
    BACKTRACK_SLACK: float = 1e-12
    POWER_ITERS: int = 200
    SUCCESS_FLOOR: float = 1e-5  # noiseless success gate
    CUBIC_ZERO_GUARD: float = 1e-300

    # Solver defaults
    BACKTRACK_XI: float = 0.9
    BACKTRACK_KAPPA: float = 0.01
    BACKTRACK_L0: float = 1.0
    WF_MU: float = 0.1
    WF_MU_MAX: float = 0.2
    WF_RAMP: float = 330.0
    RECORD_EVERY: int = 100
