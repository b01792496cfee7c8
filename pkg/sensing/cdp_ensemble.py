import numpy as np

from .base_ensemble import EnsembleKind, SensingEnsemble

# P(d = -1), P(d = 0), P(d = 1)
MASK_VALUES = np.array([-1.0, 0.0, 1.0])
MASK_PROBS = np.array([0.25, 0.5, 0.25])


class CDPEnsemble(SensingEnsemble):
    """
    Coded diffraction patterns: block p of Ax is the unnormalized DFT of d_p * x.

    Blocks are concatenated mask-major, so m = n * P. The adjoint uses the
    matching conjugate transform n * ifft.
    """

    kind = EnsembleKind.CDP

    def __init__(self, masks: np.ndarray, seed: int = 0):
        masks = np.array(masks, dtype=float)
        if masks.ndim != 2:
            raise ValueError(f"masks must have shape (P, n), got {masks.shape}")
        if not np.all(np.isin(masks, MASK_VALUES)):
            raise ValueError("mask entries must lie in {-1, 0, 1}")
        P, n = masks.shape
        super().__init__(n=n, m=n * P, seed=seed)
        self.masks = masks
        self.masks.setflags(write=False)

    @property
    def P(self) -> int:
        return self.masks.shape[0]

    def _forward(self, x: np.ndarray) -> np.ndarray:
        return np.fft.fft(self.masks * x[None, :], axis=1).ravel()

    def _adjoint(self, v: np.ndarray) -> np.ndarray:
        blocks = self.n * np.fft.ifft(v.reshape(self.P, self.n), axis=1)
        return np.sum(self.masks * blocks.real, axis=0)

    def row_norms_sq(self) -> np.ndarray:
        nnz = np.count_nonzero(self.masks, axis=1).astype(float)
        return np.repeat(nnz, self.n)

    def total_row_energy(self) -> float:
        return float(self.n * np.sum(self.masks ** 2))

    def describe(self) -> dict:
        info = super().describe()
        info["P"] = self.P
        return info


def cdp_ensemble(n: int, P: int, seed: int) -> CDPEnsemble:
    if n < 1 or P < 1:
        raise ValueError(f"cdp_ensemble needs n >= 1 and P >= 1, got n={n}, P={P}")
    rng = np.random.default_rng(seed)
    masks = rng.choice(MASK_VALUES, size=(P, n), p=MASK_PROBS)
    E = CDPEnsemble(masks, seed=seed)
    E.logger.debug("Built CDP ensemble", extra=E.describe())
    return E
