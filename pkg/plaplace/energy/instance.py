import numpy as np

from plaplace.datatypes import (
    ExponentField,
    InputShapeError,
    ParameterFunction,
    WeightField,
)
from plaplace.nonlinearity import Nonlinearity


def _as_field(cls, T, value):
    if isinstance(value, cls):
        if value.T != T:
            raise InputShapeError(f"{cls.name} has T={value.T} but the instance has T={T}")
        return value
    return cls(T, value)


class ProblemInstance:
    """
    One Dirichlet problem

        -Delta(h(k-1) |Delta x(k-1)|^(p(k-1)-2) Delta x(k-1)) = lambda f(k, x(k), u(k)),
        k in Z[1, T], x(0) = x(T+1) = 0.
    """

    def __init__(self, T: int, p, h, lam: float, f: Nonlinearity, u=0.0):
        self.T = int(T)
        self.p = _as_field(ExponentField, self.T, p)
        self.h = _as_field(WeightField, self.T, h)
        if isinstance(u, ParameterFunction):
            if u.T != self.T:
                raise InputShapeError(f"u has T={u.T} but the instance has T={self.T}")
            self.u = u
        else:
            self.u = ParameterFunction(self.T, u)

        self.lam = float(lam)
        if not (np.isfinite(self.lam) and self.lam > 0):
            raise ValueError(f"lambda must be positive but got {lam}")

        if not isinstance(f, Nonlinearity):
            raise TypeError(f"f must be a Nonlinearity but got {type(f).__name__}")
        if f.T is not None and f.T != self.T:
            raise InputShapeError(f"f is defined for T={f.T} but the instance has T={self.T}")
        self.f = f

        self.nodes = np.arange(1, self.T + 1)

    @property
    def growth(self):
        return self.f.growth

    def with_parameter(self, u):
        return ProblemInstance(self.T, self.p, self.h, self.lam, self.f, u)

    def with_lambda(self, lam: float):
        return ProblemInstance(self.T, self.p, self.h, lam, self.f, self.u)

    def scaled(self, factor: float):
        """Multiply h and lambda by the same factor; the minimizer is unchanged."""
        return ProblemInstance(self.T, self.p, self.h.scaled(factor), self.lam * factor, self.f, self.u)

    def to_dict(self):
        return {
            "T": self.T,
            "p": self.p.values.tolist(),
            "h": self.h.values.tolist(),
            "lambda": self.lam,
            "f": self.f.describe(),
            "u": self.u.values.tolist(),
        }

    def __repr__(self):
        return f"ProblemInstance(T={self.T}, lambda={self.lam}, f={self.f!r})"
