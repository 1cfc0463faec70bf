import numpy as np

from plaplace.datatypes import ExponentField, WeightField


def lambda_threshold(p: ExponentField, h: WeightField, g, c_bundle) -> float:
    """
    lambda* = C1 h- (q- + 1) / (p+ a+ c_{q+ + 1}); +inf when a+ = 0.
    Below lambda* the borderline case p- = q+ + 1 is still coercive.
    """
    a_plus = g.a_plus
    if a_plus == 0:
        return np.inf
    c = c_bundle.c(g.q_plus + 1)
    return (c_bundle.C1 * h.minus * (g.q_minus + 1)) / (p.plus * a_plus * c)


def dual_lambda_threshold(p: ExponentField, h: WeightField, g, c_bundle) -> float:
    """(T+1)^((1-p-)/(2p-)) h- (q- + 1) / (p+ a+ c_{q+ + 1}), taken as stated."""
    a_plus = g.a_plus
    if a_plus == 0:
        return np.inf
    c = c_bundle.c(g.q_plus + 1)
    scale = (p.T + 1) ** ((1 - p.minus) / (2 * p.minus))
    return (scale * h.minus * (g.q_minus + 1)) / (p.plus * a_plus * c)
