import numpy as np
from scipy import linalg

from plaplace.datatypes import GridFunction, SolverOptions
from plaplace.energy import ProblemInstance
from plaplace.utils import forward_difference

from .descent import DescentSolver

MAX_SHIFTS = 30


class NewtonSolver(DescentSolver):
    """
    Damped Newton on J_u for p- >= 2. The Hessian is tridiagonal with
    weights w(j) = h(j) (p(j)-1) |dx(j)|^(p(j)-2); where it is singular or
    indefinite a growing diagonal shift is added until the step descends.
    """

    def __init__(self, inst: ProblemInstance, opts: SolverOptions = None, objective: str = "primal"):
        if inst.p.minus < 2:
            raise ValueError(f"Newton's method needs p- >= 2 but got p- = {inst.p.minus}")
        super().__init__(inst, opts, objective)

    def hessian_bands(self, z):
        inst = self.inst
        x = GridFunction.from_interior(z)
        p = inst.p.edges
        with np.errstate(over="ignore", invalid="ignore"):
            w = inst.h.edges * (p - 1) * np.abs(forward_difference(x)) ** (p - 2)
        slope = inst.f.derivative(inst.nodes, z, inst.u.values)
        diag = w[:-1] + w[1:] - inst.lam * np.broadcast_to(slope, z.shape)
        return diag, -w[1:-1]

    def _direction(self, z, g):
        diag, off = self.hessian_bands(z)
        T = len(z)
        shift = 0.0
        for _ in range(MAX_SHIFTS):
            ab = np.zeros((3, T))
            ab[0, 1:] = off
            ab[1] = diag + shift
            ab[2, :-1] = off
            try:
                d = linalg.solve_banded((1, 1), ab, -g)
            except (linalg.LinAlgError, ValueError):
                d = None
            if d is not None and np.all(np.isfinite(d)) and np.dot(g, d) < 0:
                return d
            shift = max(10 * shift, 1e-8 * (1.0 + np.max(np.abs(diag))))
        return -g

    def _next_step(self, s, y, t, bb_steps):
        super()._next_step(s, y, t, bb_steps)
        return 1.0
