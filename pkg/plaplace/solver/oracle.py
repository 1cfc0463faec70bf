import numpy as np
from scipy import linalg

from plaplace.datatypes import GridFunction, OraclePreconditionError
from plaplace.energy import ProblemInstance


def tridiagonal_oracle(inst: ProblemInstance) -> GridFunction:
    """
    Exact solution for p = 2 and f independent of x:

        (h(k-1) + h(k)) x(k) - h(k-1) x(k-1) - h(k) x(k+1) = lambda f(k, ., u(k)).
    """
    if not np.all(inst.p.edges == 2):
        raise OraclePreconditionError("The tridiagonal oracle needs p = 2 on Z[0, T]")
    if inst.f.depends_on_x:
        raise OraclePreconditionError("The tridiagonal oracle needs f independent of x")

    T = inst.T
    h = inst.h.edges
    rhs = inst.lam * np.broadcast_to(inst.f.values(inst.nodes, 0.0, inst.u.values), (T,))

    ab = np.zeros((3, T))
    ab[0, 1:] = -h[1:T]
    ab[1] = h[:-1] + h[1:]
    ab[2, :-1] = -h[1:T]
    return GridFunction.from_interior(linalg.solve_banded((1, 1), ab, rhs))
