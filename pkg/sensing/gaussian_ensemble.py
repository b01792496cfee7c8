import numpy as np

from .base_ensemble import EnsembleKind, SensingEnsemble


class GaussianEnsemble(SensingEnsemble):
    """Dense real ensemble with i.i.d. standard normal entries."""

    kind = EnsembleKind.GAUSSIAN

    def __init__(self, matrix: np.ndarray, seed: int = 0):
        matrix = np.array(matrix, dtype=float)
        if matrix.ndim != 2:
            raise ValueError(f"sensing matrix must be 2-D, got shape {matrix.shape}")
        super().__init__(n=matrix.shape[1], m=matrix.shape[0], seed=seed)
        self.matrix = matrix
        self.matrix.setflags(write=False)

    def _forward(self, x: np.ndarray) -> np.ndarray:
        return (self.matrix @ x).astype(np.complex128)

    def _adjoint(self, v: np.ndarray) -> np.ndarray:
        return self.matrix.T @ v.real

    def row_norms_sq(self) -> np.ndarray:
        return np.einsum("ij,ij->i", self.matrix, self.matrix)


def gaussian_ensemble(n: int, m: int, seed: int) -> GaussianEnsemble:
    if n < 1 or m < 1:
        raise ValueError(f"gaussian_ensemble needs n >= 1 and m >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    E = GaussianEnsemble(rng.standard_normal((m, n)), seed=seed)
    E.logger.debug("Built Gaussian ensemble", extra=E.describe())
    return E
