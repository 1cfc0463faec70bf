# Core functionality that should always be available
from .descent import DescentSolver
from .multistart import multistart, uniqueness_radius
from .newton import NewtonSolver
from .oracle import tridiagonal_oracle
from .probe import RayProbe, coercivity_ray_probe
from .report import SolveReport, UniquenessReport
from .solve import maximize_dual, minimize, newton_minimize

__all__ = [
    "DescentSolver",
    "multistart",
    "uniqueness_radius",
    "NewtonSolver",
    "tridiagonal_oracle",
    "RayProbe",
    "coercivity_ray_probe",
    "SolveReport",
    "UniquenessReport",
    "maximize_dual",
    "minimize",
    "newton_minimize",
]
