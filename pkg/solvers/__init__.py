"""
First-order solvers for intensity phase retrieval.

Provides mirror descent in the quartic-entropy geometry (constant step or
backtracking) and a Wirtinger-flow baseline, both producing a SolverTrace.
"""

from .trace import SolverTrace, StopReason
from .base_solver import (
    BaseSolver,
    SolverConfig,
    ConstantStep,
    Backtracking,
    WirtingerSchedule,
    SolverError,
    NonFiniteError,
    BacktrackingError,
    random_initialization,
)
from .mirror_descent import MirrorDescentSolver, mirror_step, mirror_descent
from .wirtinger_flow import WirtingerFlowSolver, wirtinger_flow, default_wirtinger_config

# Solver registry for configuration-driven runs
AVAILABLE_SOLVERS = {
    'mirror_descent': MirrorDescentSolver,
    'wirtinger_flow': WirtingerFlowSolver,
}


def get_solver(solver_name: str, config: SolverConfig) -> BaseSolver:
    """Factory function to instantiate solvers by name."""
    if solver_name not in AVAILABLE_SOLVERS:
        raise ValueError(f"Unknown solver: {solver_name}. Available: {list(AVAILABLE_SOLVERS.keys())}")
    return AVAILABLE_SOLVERS[solver_name](config)


__all__ = [
    'SolverTrace',
    'StopReason',
    'BaseSolver',
    'SolverConfig',
    'ConstantStep',
    'Backtracking',
    'WirtingerSchedule',
    'SolverError',
    'NonFiniteError',
    'BacktrackingError',
    'random_initialization',
    'MirrorDescentSolver',
    'WirtingerFlowSolver',
    'mirror_step',
    'mirror_descent',
    'wirtinger_flow',
    'default_wirtinger_config',
    'AVAILABLE_SOLVERS',
    'get_solver',
]
