"""
Coercivity lower bound B(r) <= J_u(x) for every x with h_norm(x) = r.

    B(r) = (C1 h-/p+) r^p- - lambda a+ c_{q+ + 1} / (q- + 1) r^(q+ + 1)
           - lambda b+ c_1 (T+1) r - C2 max(1, h-/p+) - [q+ > q-] lambda a+ T / (q- + 1)

The superlinear term uses sum|x|^m <= c_m (sum|dx|^2)^(m/2), valid for m >= 2.
"""
import numpy as np
from scipy import optimize

from .bundle import compute_constants


class BoundCurve:
    def __init__(
        self,
        T: int,
        lam: float,
        p_minus: float,
        p_plus: float,
        h_minus: float,
        a_plus: float,
        b_plus: float,
        q_minus: float,
        q_plus: float,
        C1: float,
        C2: float,
        c_superlinear: float,
        c_linear: float,
        node_factor: bool = False,
    ):
        self.T = int(T)
        self.lam = float(lam)
        self.p_minus = float(p_minus)
        self.q_plus = float(q_plus)
        self.node_factor = node_factor

        self.coercive = C1 * h_minus / p_plus
        self.superlinear = self.lam * a_plus * c_superlinear / (q_minus + 1)
        if node_factor:
            self.superlinear *= T + 1
        self.linear = self.lam * b_plus * c_linear * (T + 1)
        self.constant = C2 * max(1.0, h_minus / p_plus)
        if q_plus > q_minus:
            # Nodes with q(k) < q+ and |x(k)| < 1
            self.constant += self.lam * a_plus * T / (q_minus + 1)

    @classmethod
    def from_instance(cls, inst, bundle=None, node_factor: bool = False):
        g = inst.growth
        if g is None:
            raise ValueError("The coercivity bound needs declared growth data")
        if bundle is None:
            bundle = compute_constants(inst.p, inst.h, g)
        return cls(
            T=inst.T,
            lam=inst.lam,
            p_minus=inst.p.minus,
            p_plus=inst.p.plus,
            h_minus=inst.h.minus,
            a_plus=g.a_plus,
            b_plus=g.b_plus,
            q_minus=g.q_minus,
            q_plus=g.q_plus,
            C1=bundle.C1,
            C2=bundle.C2,
            c_superlinear=bundle.c(g.q_plus + 1),
            c_linear=bundle.c(1),
            node_factor=node_factor,
        )

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return (
            self.coercive * r**self.p_minus
            - self.superlinear * r ** (self.q_plus + 1)
            - self.linear * r
            - self.constant
        )

    def terms(self):
        """(coefficient, exponent) pairs, equal exponents merged."""
        merged = {}
        for coeff, power in (
            (self.coercive, self.p_minus),
            (-self.superlinear, self.q_plus + 1),
            (-self.linear, 1.0),
            (-self.constant, 0.0),
        ):
            key = next((k for k in merged if abs(k - power) <= 1e-12 * max(1.0, k)), power)
            merged[key] = merged.get(key, 0.0) + coeff
        return sorted(((c, k) for k, c in merged.items()), key=lambda t: -t[1])

    def leading_coefficient(self) -> float:
        for coeff, _ in self.terms():
            if coeff != 0:
                return coeff
        return 0.0

    def tends_to_infinity(self) -> bool:
        for coeff, power in self.terms():
            if coeff != 0:
                return coeff > 0 and power > 0
        return False

    def to_dict(self):
        return {
            "coercive": self.coercive,
            "p_minus": self.p_minus,
            "superlinear": self.superlinear,
            "q_plus_1": self.q_plus + 1,
            "linear": self.linear,
            "constant": self.constant,
            "node_factor": self.node_factor,
        }


def a_priori_radius(curve: BoundCurve, r_max: float = 1e15) -> float:
    """
    Largest root of B. Every x with J_u(x) <= 0, minimizers in particular,
    satisfies h_norm(x) <= this radius. +inf when B does not tend to +inf.
    """
    if not curve.tends_to_infinity():
        return np.inf

    rs = np.concatenate(([0.0], np.geomspace(1e-12, r_max, 2000)))
    with np.errstate(over="ignore", invalid="ignore"):
        vals = curve(rs)
    nonpositive = np.flatnonzero(~(vals > 0))
    if nonpositive.size == 0:
        return 0.0
    i = nonpositive[-1]
    if i == len(rs) - 1:
        return np.inf
    if vals[i] == 0:
        return float(rs[i])
    return float(optimize.brentq(lambda r: float(curve(r)), rs[i], rs[i + 1], xtol=1e-14, rtol=1e-12))
