# Core functionality that should always be available
from plaplace.estimates import BoundCurve, a_priori_radius

from .bound import (
    BoundViolation,
    minimum_nonpositivity_check,
    probe_energy_bound,
    probe_points,
)
from .dependence import (
    DependencePlan,
    DependenceRecord,
    DependenceReport,
    make_schedule,
    run_dependence,
)
from .sweep import SweepRow, regime_sweep

__all__ = [
    "BoundCurve",
    "a_priori_radius",
    "BoundViolation",
    "minimum_nonpositivity_check",
    "probe_energy_bound",
    "probe_points",
    "DependencePlan",
    "DependenceRecord",
    "DependenceReport",
    "make_schedule",
    "run_dependence",
    "SweepRow",
    "regime_sweep",
]
