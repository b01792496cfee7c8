"""
Persistence layer for mirror-pr.

Manages:
- CSV traces and phase-diagram grids
- JSON run summaries
- PGM images
- The optional SQLite run ledger
"""

from .run_ledger import RunLedger
from .traces import (
    TRACE_COLUMNS,
    GRID_COLUMNS,
    write_frame_csv,
    trace_to_frame,
    write_trace_csv,
    grid_to_frame,
    write_grid_csv,
    write_summary_json,
)
from .pgm import PgmImage, PgmFormatError, read_pgm, write_pgm

__all__ = [
    'RunLedger',
    'get_run_ledger',
    'TRACE_COLUMNS',
    'GRID_COLUMNS',
    'write_frame_csv',
    'trace_to_frame',
    'write_trace_csv',
    'grid_to_frame',
    'write_grid_csv',
    'write_summary_json',
    'PgmImage',
    'PgmFormatError',
    'read_pgm',
    'write_pgm',
]

_ledger_instances = {}


def get_run_ledger(db_path: str) -> RunLedger:
    """Get or create the RunLedger for a database path."""
    if db_path not in _ledger_instances:
        _ledger_instances[db_path] = RunLedger(db_path)
    return _ledger_instances[db_path]
