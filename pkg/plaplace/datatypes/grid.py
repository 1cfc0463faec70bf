"""
Fields on the discrete interval Z[0, T+1].

All types are immutable after construction: the stored arrays are
read-only copies, and arithmetic on `GridFunction` returns new values.
"""
import numpy as np

from .errors import InputShapeError


def _frozen(values, dtype=float):
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


def _check_T(T):
    if int(T) != T or T < 1:
        raise ValueError(f"T must be a positive integer but got {T}")
    return int(T)


class GridFunction:
    """A real function on Z[0, T+1] with x(0) = x(T+1) = 0."""

    __slots__ = ("T", "values")

    def __init__(self, T: int, values):
        T = _check_T(T)
        values = _frozen(values)
        if values.ndim != 1 or len(values) != T + 2:
            raise InputShapeError(
                f"GridFunction with T={T} needs {T + 2} values but got shape {values.shape}"
            )
        if values[0] != 0.0 or values[-1] != 0.0:
            raise ValueError("GridFunction must vanish at k = 0 and k = T+1")
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("GridFunction is immutable")

    @classmethod
    def zeros(cls, T: int):
        return cls(T, np.zeros(_check_T(T) + 2))

    @classmethod
    def from_interior(cls, interior):
        interior = np.asarray(interior, dtype=float)
        if interior.ndim != 1 or len(interior) < 1:
            raise InputShapeError(f"Interior values must be a nonempty vector, got {interior.shape}")
        return cls(len(interior), np.concatenate(([0.0], interior, [0.0])))

    @property
    def interior(self):
        return self.values[1:-1]

    def _coerce(self, other):
        if isinstance(other, GridFunction):
            if other.T != self.T:
                raise InputShapeError(f"Mismatched grids: T={self.T} and T={other.T}")
            return other.values
        return NotImplemented

    def __add__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return GridFunction(self.T, self.values + vals)

    def __sub__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return GridFunction(self.T, self.values - vals)

    def __mul__(self, scalar):
        if isinstance(scalar, GridFunction):
            return NotImplemented
        return GridFunction(self.T, float(scalar) * self.values)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return GridFunction(self.T, self.values / float(scalar))

    def __neg__(self):
        return GridFunction(self.T, -self.values)

    def __eq__(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        return self.T == other.T and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.T, self.values.tobytes()))

    def __repr__(self):
        return f"GridFunction(T={self.T}, values={self.values.tolist()})"


class _NodeField:
    """Common storage for p and h, indexed k = 0..T+1."""

    __slots__ = ("T", "values")
    name = "field"

    def __init__(self, T: int, values):
        T = _check_T(T)
        values = np.asarray(values, dtype=float)
        if values.ndim == 0:
            values = np.full(T + 2, float(values))
        values = _frozen(values)
        if values.ndim != 1 or len(values) != T + 2:
            raise InputShapeError(
                f"{self.name} with T={T} needs {T + 2} values but got shape {values.shape}"
            )
        self._check(values)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _check(self, values):
        pass

    @property
    def edges(self):
        """Entries k = 0..T, the ones consumed by the difference terms."""
        return self.values[:-1]

    @property
    def minus(self):
        return float(np.min(self.values))

    @property
    def plus(self):
        return float(np.max(self.values))

    def scaled(self, factor):
        return type(self)(self.T, self.values * float(factor))

    def __repr__(self):
        return f"{type(self).__name__}(T={self.T}, values={self.values.tolist()})"


class ExponentField(_NodeField):
    __slots__ = ()
    name = "p"

    def _check(self, values):
        if not np.all(values > 1):
            bad = np.flatnonzero(~(values > 1)).tolist()
            raise ValueError(f"p must exceed 1 (violated at k = {bad})")


class WeightField(_NodeField):
    __slots__ = ()
    name = "h"

    def _check(self, values):
        if not np.all(values > 0):
            bad = np.flatnonzero(~(values > 0)).tolist()
            raise ValueError(f"h must be positive (violated at k = {bad})")


class ParameterFunction:
    """The parameter u on Z[1, T]; values[k-1] holds u(k)."""

    __slots__ = ("T", "values")

    def __init__(self, T: int, values):
        T = _check_T(T)
        values = np.asarray(values, dtype=float)
        if values.ndim == 0:
            values = np.full(T, float(values))
        values = _frozen(values)
        if values.ndim != 1 or len(values) != T:
            raise InputShapeError(
                f"u with T={T} needs {T} values but got shape {values.shape}"
            )
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("ParameterFunction is immutable")

    def shifted(self, direction, delta: float):
        """u + delta * direction."""
        direction = direction.values if isinstance(direction, ParameterFunction) else direction
        return ParameterFunction(self.T, self.values + float(delta) * np.asarray(direction, dtype=float))

    def __repr__(self):
        return f"ParameterFunction(T={self.T}, values={self.values.tolist()})"
