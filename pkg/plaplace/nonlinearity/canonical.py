import numpy as np

from plaplace.utils import powq

from .base import Nonlinearity
from .growth import GrowthData, broadcast_nodes


class CanonicalFamily(Nonlinearity):
    """
    f(k,x,u) = -a(k) powq(x, q(k)) + b(k) (1 + rho sin u).

    With a >= 0 and 0 <= rho < 1 this satisfies H1 with (a, |b|(1+rho), q),
    H2 always, and H3 as soon as some b(k) is nonzero.
    """

    def __init__(self, T: int, a=0.0, b=1.0, q=1.0, rho: float = 0.0):
        self.T = int(T)
        self.a = broadcast_nodes("a", a, self.T)
        self.b = broadcast_nodes("b", b, self.T)
        self.q = broadcast_nodes("q", q, self.T)
        self.rho = float(rho)

        if np.any(self.a < 0):
            raise ValueError("a must be nonnegative")
        if np.any(self.q < 1):
            raise ValueError("q must be at least 1")
        if not 0 <= self.rho < 1:
            raise ValueError(f"rho must lie in [0, 1) but got {self.rho}")

        self.growth = GrowthData(self.T, self.a, np.abs(self.b) * (1 + self.rho), self.q)

    @property
    def depends_on_x(self):
        return bool(np.any(self.a != 0))

    def _coupling(self, ks, us):
        idx = self._check_nodes(ks).astype(int) - 1
        return idx, self.b[idx] * (1 + self.rho * np.sin(us))

    def values(self, ks, xs, us):
        idx, forcing = self._coupling(ks, us)
        return -self.a[idx] * powq(xs, self.q[idx]) + forcing

    def primitives(self, ks, xs, us):
        idx, forcing = self._coupling(ks, us)
        xs = np.asarray(xs, dtype=float)
        q1 = self.q[idx] + 1
        return -self.a[idx] * np.abs(xs) ** q1 / q1 + forcing * xs

    def derivative(self, ks, xs, us, step: float = None):
        idx = self._check_nodes(ks).astype(int) - 1
        xs = np.asarray(xs, dtype=float)
        q = self.q[idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            slope = -self.a[idx] * q * np.abs(xs) ** (q - 1)
        # q = 1 gives a constant slope; q > 1 is flat at 0
        return np.where((xs == 0) & (q > 1), 0.0, slope)

    def describe(self):
        return {
            "family": "canonical",
            "a": self.a.tolist(),
            "b": self.b.tolist(),
            "q": self.q.tolist(),
            "rho": self.rho,
        }

    def __repr__(self):
        return f"CanonicalFamily(T={self.T}, rho={self.rho})"
