import numpy as np


def powq(t, q):
    """Signed power |t|^(q-1) * t, with powq(0, q) = 0."""
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = np.sign(t) * np.abs(t) ** q
    return np.where(t == 0, 0.0, out)
