"""
spectral/initializer.py

Spectral initialization: top eigenvector of Y = (1/m) sum_r y[r] a_r a_r^T,
rescaled to norm sqrt(n * sum(y) / sum ||a_r||^2). Y is applied matrix-free.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator

from config import MirrorPRConfig
from sensing.measurements import MeasurementSet
from utils.logging_config import log_execution_time
from .power_iteration import SpectralInitError, logger, power_iteration


@dataclass
class SpectralResult:
    x0: np.ndarray
    eigenvalue: float
    scale: float
    power_iters_used: int
    clamped_count: int = 0


def spectral_matrix(M: MeasurementSet) -> LinearOperator:
    """Y as a LinearOperator; negative intensities are clamped to 0 inside Y only."""
    E = M.ensemble
    weights = np.maximum(M.y, 0.0)

    def matvec(v):
        v = np.asarray(v, dtype=float).ravel()
        return E.adjoint_apply(weights * E.apply(v)) / M.m

    return LinearOperator(shape=(M.n, M.n), matvec=matvec, rmatvec=matvec, dtype=np.float64)


@log_execution_time(logger)
def spectral_init(M: MeasurementSet, power_iters: int = MirrorPRConfig.POWER_ITERS,
                  seed: int = 0) -> SpectralResult:
    energy = M.ensemble.total_row_energy()
    if energy <= 0.0:
        raise SpectralInitError("sum of row norms is zero; spectral scale undefined")

    clamped = int(np.count_nonzero(M.y < 0))
    if clamped:
        logger.warning(f"Clamped {clamped} negative intensities to 0 inside Y",
                       extra={"clamped_count": clamped})

    Y = spectral_matrix(M)
    v, eigenvalue = power_iteration(Y.matvec, M.n, power_iters, seed)

    scale = float(np.sqrt(M.n * max(float(np.sum(M.y)), 0.0) / energy))
    x0 = scale * v
    logger.debug("Spectral initialization done",
                 extra={"eigenvalue": eigenvalue, "scale": scale, "iters": power_iters})
    return SpectralResult(x0=x0, eigenvalue=eigenvalue, scale=scale,
                          power_iters_used=power_iters, clamped_count=clamped)
