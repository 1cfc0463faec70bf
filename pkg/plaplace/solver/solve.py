from plaplace.datatypes import GridFunction, SolverOptions
from plaplace.energy import ProblemInstance

from .descent import DescentSolver
from .newton import NewtonSolver
from .report import SolveReport


def _solver(inst, opts, objective, log_event):
    opts = opts or SolverOptions()
    solver_cls = NewtonSolver if opts.method == "newton" else DescentSolver
    solver = solver_cls(inst, opts, objective)
    solver.log_event = log_event
    return solver


def minimize(inst: ProblemInstance, x0: GridFunction = None, opts: SolverOptions = None, log_event=None) -> SolveReport:
    return _solver(inst, opts, "primal", log_event).run(x0)


def maximize_dual(
    inst: ProblemInstance, x0: GridFunction = None, opts: SolverOptions = None, log_event=None
) -> SolveReport:
    """Maximize J^1_u = -J_u; the report's energy is the value of J^1_u."""
    return _solver(inst, opts, "dual", log_event).run(x0)


def newton_minimize(
    inst: ProblemInstance, x0: GridFunction = None, opts: SolverOptions = None, log_event=None
) -> SolveReport:
    opts = (opts or SolverOptions()).copy(method="newton")
    return _solver(inst, opts, "primal", log_event).run(x0)
