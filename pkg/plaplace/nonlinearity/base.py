import numpy as np


class Nonlinearity:
    """
    The nonlinear term f(k, x, u) together with its primitive
    F(k, x, u) = int_0^x f(k, t, u) dt.

    Subclasses implement the vectorized `values` and `primitives`; both
    broadcast their (k, x, u) arguments numpy-style.
    """

    # Nodes the nonlinearity is defined on; None means any k >= 1
    T = None
    growth = None

    def values(self, ks, xs, us):
        raise NotImplementedError  # We expect subclasses to implement this

    def primitives(self, ks, xs, us):
        raise NotImplementedError

    @property
    def depends_on_x(self):
        return True

    def derivative(self, ks, xs, us, step: float = 1e-6):
        """d f / d x by centered differences; subclasses may override."""
        xs = np.asarray(xs, dtype=float)
        hs = step * (1.0 + np.abs(xs))
        return (self.values(ks, xs + hs, us) - self.values(ks, xs - hs, us)) / (2 * hs)

    def _check_nodes(self, ks):
        ks = np.asarray(ks)
        if np.any(ks < 1) or (self.T is not None and np.any(ks > self.T)):
            raise ValueError(f"Nodes must lie in Z[1, {self.T if self.T is not None else 'T'}]")
        return ks

    def f(self, k, x, u):
        return float(self.values(np.asarray(k), np.asarray(x, dtype=float), np.asarray(u, dtype=float)))

    def F(self, k, x, u):
        return float(self.primitives(np.asarray(k), np.asarray(x, dtype=float), np.asarray(u, dtype=float)))

    def describe(self):
        return {"family": "custom"}


def eval_f(n: Nonlinearity, k: int, x: float, u: float):
    return n.f(k, x, u)


def eval_F(n: Nonlinearity, k: int, x: float, u: float):
    return n.F(k, x, u)
