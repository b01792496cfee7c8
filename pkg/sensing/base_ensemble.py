from abc import ABC, abstractmethod
from enum import Enum

import numpy as np
from scipy.sparse.linalg import LinearOperator

from utils.logging_config import get_logger
from utils.validators import DimensionMismatchError


class EnsembleKind(str, Enum):
    GAUSSIAN = "gaussian"
    CDP = "cdp"


class SensingEnsemble(ABC):
    """
    Base class for measurement operators x -> (<a_r, x>)_r.

    Subclasses hold the data that defines the rows a_r and implement the forward
    map, its adjoint and the row energies. Instances are read-only after
    construction and may be shared across threads.
    """

    kind: EnsembleKind

    def __init__(self, n: int, m: int, seed: int):
        if n < 1 or m < 1:
            raise ValueError(f"ensemble dimensions must be positive, got n={n}, m={m}")
        self.n = int(n)
        self.m = int(m)
        self.seed = int(seed)
        self.logger = get_logger("sensing")

    @abstractmethod
    def _forward(self, x: np.ndarray) -> np.ndarray:
        """Complex vector of length m for a validated real x."""

    @abstractmethod
    def _adjoint(self, v: np.ndarray) -> np.ndarray:
        """Real vector of length n, Re(A* v), for a validated v."""

    @abstractmethod
    def row_norms_sq(self) -> np.ndarray:
        """Return ||a_r||^2 for every row, length m."""

    def apply(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise DimensionMismatchError(
                f"{self.kind.value} ensemble expects a vector of length {self.n}, got shape {x.shape}"
            )
        return self._forward(x)

    def adjoint_apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=complex)
        if v.shape != (self.m,):
            raise DimensionMismatchError(
                f"{self.kind.value} adjoint expects a vector of length {self.m}, got shape {v.shape}"
            )
        return self._adjoint(v)

    def total_row_energy(self) -> float:
        return float(np.sum(self.row_norms_sq()))

    def as_linear_operator(self) -> LinearOperator:
        """scipy view of A; ``rmatvec`` returns the real part of A* v."""
        return LinearOperator(
            shape=(self.m, self.n),
            matvec=self.apply,
            rmatvec=self.adjoint_apply,
            dtype=np.complex128,
        )

    def materialize(self) -> np.ndarray:
        """Dense complex m x n matrix M with M @ x == apply(x); small sizes only."""
        return np.stack([self.apply(e) for e in np.eye(self.n)], axis=1)

    def describe(self) -> dict:
        return {"kind": self.kind.value, "n": self.n, "m": self.m, "seed": self.seed}


def apply(E: SensingEnsemble, x) -> np.ndarray:
    return E.apply(x)


def adjoint_apply(E: SensingEnsemble, v) -> np.ndarray:
    return E.adjoint_apply(v)
