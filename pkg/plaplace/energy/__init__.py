# Core functionality that should always be available
from .functional import (
    EnergyBreakdown,
    dual_energy,
    energy,
    flux,
    gradient,
    strong_residual,
    weak_form,
)
from .instance import ProblemInstance

__all__ = [
    "EnergyBreakdown",
    "dual_energy",
    "energy",
    "flux",
    "gradient",
    "strong_residual",
    "weak_form",
    "ProblemInstance",
]
