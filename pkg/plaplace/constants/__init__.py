# Core functionality that should always be available
from .lab import BASE_LAB_CONFIG, NONPOSITIVITY_SLACK
from .sampling import (
    BASE_SAMPLING_PLAN,
    GROWTH_SLACK,
    MONOTONE_SLACK,
    QUADRATURE_LIMIT,
    QUADRATURE_TOL,
)
from .solver import (
    BASE_SOLVER_CONFIG,
    BB_STEP_BOUNDS,
    DIVERGENCE_FLOOR,
    ITERATE_CEILING,
    MAX_BACKTRACKS,
    ROUNDOFF_FLOOR,
)
from .version import PLAPLACE_VERSION

__all__ = [
    "BASE_LAB_CONFIG",
    "NONPOSITIVITY_SLACK",
    "BASE_SAMPLING_PLAN",
    "GROWTH_SLACK",
    "MONOTONE_SLACK",
    "QUADRATURE_LIMIT",
    "QUADRATURE_TOL",
    "BASE_SOLVER_CONFIG",
    "BB_STEP_BOUNDS",
    "DIVERGENCE_FLOOR",
    "ITERATE_CEILING",
    "MAX_BACKTRACKS",
    "ROUNDOFF_FLOOR",
    "PLAPLACE_VERSION",
]
