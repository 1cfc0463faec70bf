import numpy as np

from plaplace.datatypes import InputShapeError


def broadcast_nodes(name, value, T):
    """Scalars broadcast to the T interior nodes; arrays must have length T."""
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 0:
        arr = np.full(T, float(arr))
    if arr.ndim != 1 or len(arr) != T:
        raise InputShapeError(f"{name} must be a scalar or have T = {T} entries but got shape {arr.shape}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


class GrowthData:
    """
    Declared growth |f(k,x,u)| <= a(k)|x|^q(k) + b(k), indexed k = 1..T
    (entry k-1 of each array holds node k).
    """

    def __init__(self, T: int, a, b, q):
        self.T = int(T)
        self.a = broadcast_nodes("a", a, self.T)
        self.b = broadcast_nodes("b", b, self.T)
        self.q = broadcast_nodes("q", q, self.T)

        if np.any(self.a < 0):
            raise ValueError("a must be nonnegative")
        # q = 1 is admitted: the borderline regime p = 2 needs linear growth
        if np.any(self.q < 1):
            raise ValueError("q must be at least 1")

    @property
    def a_plus(self):
        return float(np.max(self.a))

    @property
    def b_plus(self):
        # The coercivity bound needs |b|, so b+ is taken over absolute values
        return float(np.max(np.abs(self.b)))

    @property
    def q_minus(self):
        return float(np.min(self.q))

    @property
    def q_plus(self):
        return float(np.max(self.q))

    def bound(self, ks, xs):
        """Right-hand side a(k)|x|^q(k) + b(k) for integer nodes ks."""
        idx = np.asarray(ks, dtype=int) - 1
        return self.a[idx] * np.abs(xs) ** self.q[idx] + self.b[idx]

    def to_dict(self):
        return {"a": self.a.tolist(), "b": self.b.tolist(), "q": self.q.tolist()}

    def __repr__(self):
        return f"GrowthData(T={self.T}, a={self.a.tolist()}, b={self.b.tolist()}, q={self.q.tolist()})"
