"""
persistence/pgm.py

Netpbm grayscale images: P2 (ASCII) and P5 (binary, big-endian for maxval > 255).
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple

import numpy as np

MAX_MAXVAL = 65535


class PgmFormatError(ValueError):
    pass


@dataclass
class PgmImage:
    pixels: np.ndarray  # (height, width) integers in [0, maxval]
    maxval: int

    @property
    def shape(self) -> Tuple[int, int]:
        return self.pixels.shape

    def to_unit(self) -> np.ndarray:
        return self.pixels.astype(float) / self.maxval

    @classmethod
    def from_unit(cls, values: np.ndarray, maxval: int = 255) -> "PgmImage":
        pixels = np.rint(np.clip(values, 0.0, 1.0) * maxval).astype(np.int64)
        return cls(pixels=pixels, maxval=maxval)


def _header_tokens(data: bytes, count: int) -> Tuple[List[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    tokens: List[bytes] = []
    pos = 0
    while len(tokens) < count:
        if pos >= len(data):
            raise PgmFormatError("truncated PGM header")
        ch = data[pos:pos + 1]
        if ch == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        elif ch.isspace():
            pos += 1
        else:
            start = pos
            while pos < len(data) and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
                pos += 1
            tokens.append(data[start:pos])
    return tokens, pos


def read_pgm(path) -> PgmImage:
    data = Path(path).read_bytes()
    (magic, w, h, mv), pos = _header_tokens(data, 4)
    if magic not in (b"P2", b"P5"):
        raise PgmFormatError(f"unsupported magic number {magic!r}")
    width, height, maxval = int(w), int(h), int(mv)
    if not 0 < maxval <= MAX_MAXVAL:
        raise PgmFormatError(f"maxval {maxval} out of range")

    if magic == b"P5":
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        start = pos + 1  # single whitespace after maxval
        if len(data) - start < width * height * dtype.itemsize:
            raise PgmFormatError(f"expected {width * height} pixels, file is truncated")
        raster = np.frombuffer(data, dtype=dtype, count=width * height, offset=start)
    else:
        body = b" ".join(line.split(b"#", 1)[0] for line in data[pos:].splitlines())
        raster = np.array(body.split()[: width * height], dtype=np.int64)
    if raster.size != width * height:
        raise PgmFormatError(f"expected {width * height} pixels, found {raster.size}")
    return PgmImage(pixels=raster.astype(np.int64).reshape(height, width), maxval=maxval)


def write_pgm(path, image: PgmImage, binary: bool = True) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    height, width = image.shape
    pixels = np.clip(image.pixels, 0, image.maxval)
    header = f"{'P5' if binary else 'P2'}\n{width} {height}\n{image.maxval}\n".encode("ascii")
    if binary:
        dtype = np.dtype(">u2") if image.maxval > 255 else np.dtype("u1")
        path.write_bytes(header + pixels.astype(dtype).tobytes())
    else:
        rows = "\n".join(" ".join(str(int(v)) for v in row) for row in pixels)
        path.write_bytes(header + rows.encode("ascii") + b"\n")
    return path
