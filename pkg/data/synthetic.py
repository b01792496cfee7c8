"""
data/synthetic.py

Deterministic test signals: random unit vectors and a grayscale phantom image.
"""

import numpy as np


def random_unit_signal(n: int, seed: int, norm: float = 1.0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    return norm * x / np.linalg.norm(x)


def phantom_image(size: int = 64) -> np.ndarray:
    """
    Square test image with values in [0, 1]: a dim background ramp, a bright
    ellipse, a darker inner ellipse and a small square.
    """
    if size < 4:
        raise ValueError(f"phantom size must be at least 4, got {size}")
    coords = (np.arange(size) + 0.5) / size * 2.0 - 1.0
    yy, xx = np.meshgrid(coords, coords, indexing="ij")

    image = 0.1 + 0.05 * (xx + 1.0)
    outer = (xx / 0.8) ** 2 + (yy / 0.9) ** 2 <= 1.0
    inner = ((xx - 0.15) / 0.35) ** 2 + ((yy + 0.1) / 0.5) ** 2 <= 1.0
    square = (np.abs(xx + 0.45) <= 0.12) & (np.abs(yy - 0.45) <= 0.12)

    image = np.where(outer, 0.8, image)
    image = np.where(inner, 0.4, image)
    image = np.where(square, 1.0, image)
    return np.clip(image, 0.0, 1.0)
