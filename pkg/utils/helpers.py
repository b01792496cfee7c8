"""
utils/helpers.py

Seed derivation, identifiers and number formatting.
"""

import hashlib
import json
import zlib
from typing import Any, Dict

import numpy as np

SEED_PURPOSES = {
    "ensemble": 1,
    "noise": 2,
    "truth": 3,
    "init": 4,
    "power": 5,
    "samples": 6,
}


def _key_to_int(key: Any) -> int:
    if isinstance(key, (int, np.integer)):
        if key < 0:
            raise ValueError(f"seed keys must be non-negative, got {key}")
        return int(key)
    if isinstance(key, str):
        return SEED_PURPOSES.get(key, zlib.crc32(key.encode("utf-8")))
    raise TypeError(f"unsupported seed key type: {type(key).__name__}")


def derive_seed(seed: int, *keys: Any) -> int:
    """
    Derive a deterministic 63-bit seed for a substream.

    ``derive_seed(seed, "noise")`` and ``derive_seed(seed, n, m, trial, "init")``
    are independent of each other and stable across runs and platforms.
    """
    entropy = [int(seed)] + [_key_to_int(k) for k in keys]
    state = np.random.SeedSequence(entropy).generate_state(2, dtype=np.uint32)
    return int((int(state[0]) << 31) ^ int(state[1])) & ((1 << 63) - 1)


def make_rng(seed: int, *keys: Any) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *keys) if keys else seed)


def format_number(value: float, digits: int = 17) -> str:
    """Format a float with ``digits`` significant digits (``inf``/``nan`` kept)."""
    return f"{float(value):.{digits}g}"


def config_digest(payload: Dict[str, Any]) -> str:
    blob = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]
