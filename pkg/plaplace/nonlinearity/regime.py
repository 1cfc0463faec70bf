from typing import NamedTuple

import numpy as np

from plaplace.datatypes import DualRegime, ExponentField, Regime

from .growth import GrowthData


class RegimeClassification(NamedTuple):
    primal: Regime
    dual: DualRegime
    p_minus: float
    p_plus: float
    q_minus: float
    q_plus: float
    lambda_star: float
    dual_lambda_star: float

    def to_dict(self):
        return {
            "primal": self.primal.label,
            "dual": self.dual.label,
            "p_minus": self.p_minus,
            "p_plus": self.p_plus,
            "q_minus": self.q_minus,
            "q_plus": self.q_plus,
            "lambda_star": self.lambda_star,
            "dual_lambda_star": self.dual_lambda_star,
        }


def _same(a, b):
    return abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


def classify_regime(p: ExponentField, g: GrowthData, lam: float, c) -> RegimeClassification:
    """
    Place (p, q, lambda) among the cases of the existence theorem and of its
    dual (concave) counterpart. `c` is the ConstantsBundle of the instance.
    """
    if g is None:
        return RegimeClassification(
            Regime.UNKNOWN, DualRegime.UNKNOWN, p.minus, p.plus, np.nan, np.nan, np.nan, np.nan
        )

    p_minus, p_plus = p.minus, p.plus
    q_minus, q_plus = g.q_minus, g.q_plus

    if _same(p_minus, q_plus + 1):
        primal = Regime.BORDERLINE_ADMISSIBLE if lam < c.lambda_star else Regime.BORDERLINE_INADMISSIBLE
    elif p_minus > q_plus + 1:
        primal = Regime.STRICTLY_COERCIVE
    else:
        primal = Regime.NOT_COVERED

    if _same(q_minus + 1, p_plus):
        dual = (
            DualRegime.BORDERLINE_ADMISSIBLE
            if lam > c.dual_lambda_star
            else DualRegime.BORDERLINE_INADMISSIBLE
        )
    elif q_minus + 1 > p_plus:
        dual = DualRegime.ANTI_COERCIVE
    else:
        dual = DualRegime.NOT_COVERED

    return RegimeClassification(
        primal, dual, p_minus, p_plus, q_minus, q_plus, c.lambda_star, c.dual_lambda_star
    )
