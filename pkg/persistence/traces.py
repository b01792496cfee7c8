"""
persistence/traces.py

CSV and JSON writers for solver traces, phase-diagram grids and run summaries.
Floats are written with 17 significant digits so identical runs give identical
bytes.
"""

from dataclasses import asdict, is_dataclass
import json
from pathlib import Path
from typing import Any, Iterable

import numpy as np
import pandas as pd

from solvers.trace import SolverTrace

TRACE_COLUMNS = ["iter", "f", "rel_error", "L_k", "backtracks"]
GRID_COLUMNS = ["algorithm", "n", "m", "trials", "successes", "median_rel_error"]
FLOAT_FORMAT = "%.17g"


def write_frame_csv(frame: pd.DataFrame, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="nan", lineterminator="\n")
    return path


def trace_to_frame(trace: SolverTrace) -> pd.DataFrame:
    return pd.DataFrame({
        "iter": np.arange(len(trace.f_values), dtype=int),
        "f": np.asarray(trace.f_values, dtype=float),
        "rel_error": np.asarray(trace.rel_errors, dtype=float),
        "L_k": np.asarray(trace.L_history, dtype=float),
        "backtracks": np.asarray(trace.backtrack_counts, dtype=int),
    }, columns=TRACE_COLUMNS)


def write_trace_csv(trace: SolverTrace, path) -> Path:
    return write_frame_csv(trace_to_frame(trace), path)


def grid_to_frame(cells: Iterable[Any]) -> pd.DataFrame:
    rows = [asdict(c) if is_dataclass(c) else dict(c) for c in cells]
    frame = pd.DataFrame(rows, columns=GRID_COLUMNS)
    return frame.sort_values(["n", "m", "algorithm"], kind="mergesort").reset_index(drop=True)


def write_grid_csv(cells: Iterable[Any], path) -> Path:
    return write_frame_csv(grid_to_frame(cells), path)


def _to_builtin(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_to_builtin(v) for v in value.tolist()]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if np.isfinite(value) else str(value)
    return value


def write_summary_json(summary: dict, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_to_builtin(summary), indent=2, sort_keys=True) + "\n")
    return path
