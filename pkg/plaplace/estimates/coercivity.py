import numpy as np

from plaplace.datatypes import ExponentField, GridFunction
from plaplace.utils import forward_difference, h_norm


def coercivity_constants(p: ExponentField):
    """
    Constructive (C1, C2) with

        sum_{k=1}^{T+1} |dx(k-1)|^p(k-1) >= C1 ||x||^p- - C2.

    Split the edges on |dx| >= 1: there |dx|^p(k) >= |dx|^p-, elsewhere the
    loss is at most 1 per edge, so C2 = T + 1. Then sum |dx|^p- >= C1 ||x||^p-
    by the left inequality of the norm relation (p- >= 2) or by
    monotonicity of l^r norms (1 < p- < 2, C1 = 1).
    """
    T = p.T
    p_minus = p.minus
    if not p_minus > 1:
        raise ValueError(f"p- must exceed 1 but got {p_minus}")
    if p_minus >= 2:
        C1 = float((T + 1) ** ((2 - p_minus) / 2))
    else:
        C1 = 1.0
    return C1, float(T + 1)


def norm_relation_coefficients(m: float, T: int):
    """((T+1)^((2-m)/(2m)), (T+1)^(1/m)) bounding (sum|dx|^m)^(1/m) by ||x||."""
    return float((T + 1) ** ((2 - m) / (2 * m))), float((T + 1) ** (1 / m))


def norm_relation_check(m: float, x: GridFunction):
    if m < 2:
        raise ValueError(f"The norm relation is stated for m >= 2 but got m = {m}")
    lower, upper = norm_relation_coefficients(m, x.T)
    norm = h_norm(x)
    mid = float(np.sum(np.abs(forward_difference(x)) ** m) ** (1 / m))
    return lower * norm, mid, upper * norm
