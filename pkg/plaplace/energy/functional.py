"""
J_u(x) = sum_{k=1}^{T+1} h(k-1)/p(k-1) |dx(k-1)|^p(k-1) - lambda sum_{k=1}^{T} F(k, x(k), u(k))

The gradient is assembled in strong form, so it is the residual of the
boundary-value problem at the interior nodes.
"""
from typing import NamedTuple

import numpy as np

from plaplace.datatypes import GridFunction, InputShapeError
from plaplace.utils import forward_difference, powq

from .instance import ProblemInstance


class EnergyBreakdown(NamedTuple):
    diffusion: float
    potential: float
    total: float

    def to_dict(self):
        return {"diffusion": self.diffusion, "potential": self.potential, "total": self.total}


def _check_grid(inst: ProblemInstance, x: GridFunction):
    if x.T != inst.T:
        raise InputShapeError(f"x has T={x.T} but the instance has T={inst.T}")


def flux(inst: ProblemInstance, x: GridFunction):
    """h(k-1) |dx(k-1)|^(p(k-1)-2) dx(k-1) for k = 1..T+1."""
    _check_grid(inst, x)
    return inst.h.edges * powq(forward_difference(x), inst.p.edges - 1)


def energy(inst: ProblemInstance, x: GridFunction) -> EnergyBreakdown:
    _check_grid(inst, x)
    p = inst.p.edges
    diffusion = float(np.sum(inst.h.edges / p * np.abs(forward_difference(x)) ** p))
    potential = float(np.sum(inst.f.primitives(inst.nodes, x.interior, inst.u.values)))
    return EnergyBreakdown(diffusion, potential, diffusion - inst.lam * potential)


def gradient(inst: ProblemInstance, x: GridFunction):
    """Entries k = 1..T of dJ_u/dx(k)."""
    phi = flux(inst, x)
    forcing = inst.f.values(inst.nodes, x.interior, inst.u.values)
    return phi[:-1] - phi[1:] - inst.lam * np.asarray(forcing, dtype=float)


def strong_residual(inst: ProblemInstance, x: GridFunction):
    return gradient(inst, x)


def weak_form(inst: ProblemInstance, x: GridFunction, y: GridFunction) -> float:
    """<J_u'(x), y> = sum h(k-1) phi_p(dx(k-1)) dy(k-1) - lambda sum f(k, x(k), u(k)) y(k)."""
    _check_grid(inst, y)
    forcing = inst.f.values(inst.nodes, x.interior, inst.u.values)
    return float(
        np.dot(flux(inst, x), forward_difference(y)) - inst.lam * np.dot(forcing, y.interior)
    )


def dual_energy(inst: ProblemInstance, x: GridFunction) -> float:
    """lambda sum F - sum h(k-1)/p(k-1) |dx(k-1)|^p(k-1), the concave counterpart of J_u."""
    return -energy(inst, x).total
