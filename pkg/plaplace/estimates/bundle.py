import numpy as np

from plaplace.datatypes import ExponentField, WeightField

from .coercivity import coercivity_constants
from .embedding import embedding_constant, sharp_embedding_constant
from .thresholds import dual_lambda_threshold, lambda_threshold

PROVENANCE = {
    "c_m": "sum_{k=1}^{T} k^(m-1): telescoping plus discrete Hoelder",
    "c_m_sharp": "multistart L-BFGS ascent of the embedding ratio (lower bound of the optimum)",
    "C1_large": "(T+1)^((2-p-)/2): left norm relation with m = p-",
    "C1_small": "1: l^p- norm dominates l^2 norm for p- < 2",
    "C2": "T+1: at most 1 lost per edge with |dx| < 1",
    "lambda_star": "C1 h- (q- + 1) / (p+ a+ c_{q+ + 1})",
    "dual_lambda_star": "(T+1)^((1-p-)/(2p-)) h- (q- + 1) / (p+ a+ c_{q+ + 1})",
}


class ConstantsBundle:
    """Every constant the existence argument invokes, with where each came from."""

    def __init__(self, T: int, C1: float, C2: float, use_sharp: bool = False):
        self.T = int(T)
        self.C1 = float(C1)
        self.C2 = float(C2)
        self.use_sharp = use_sharp
        self.provable = {}
        self.sharp = {}
        self.lambda_star = np.inf
        self.dual_lambda_star = np.inf
        self.provenance = {}

        if not (self.C1 > 0 and self.C2 > 0):
            raise ValueError("C1 and C2 must be positive")

    def c(self, m: float) -> float:
        """c_m used downstream: sharpened if requested and available, provable otherwise."""
        m = float(m)
        if self.use_sharp and m in self.sharp:
            return self.sharp[m]
        if m not in self.provable:
            self.provable[m] = embedding_constant(m, self.T)
        return self.provable[m]

    def to_dict(self):
        return {
            "T": self.T,
            "C1": self.C1,
            "C2": self.C2,
            "c_m": {repr(m): v for m, v in sorted(self.provable.items())},
            "c_m_sharp": {repr(m): v for m, v in sorted(self.sharp.items())},
            "lambda_star": self.lambda_star,
            "dual_lambda_star": self.dual_lambda_star,
            "use_sharp": self.use_sharp,
            "provenance": dict(self.provenance),
        }


def compute_constants(
    p: ExponentField,
    h: WeightField = None,
    g=None,
    ms=(),
    sharpen: bool = False,
    use_sharp: bool = False,
    seed: int = 0,
) -> ConstantsBundle:
    """
    Build the ConstantsBundle for an instance. c_1 and c_{q+ + 1} are always
    included since the coercivity estimate needs them.
    """
    C1, C2 = coercivity_constants(p)
    bundle = ConstantsBundle(p.T, C1, C2, use_sharp=use_sharp)
    bundle.provenance["C1"] = PROVENANCE["C1_large"] if p.minus >= 2 else PROVENANCE["C1_small"]
    bundle.provenance["C2"] = PROVENANCE["C2"]
    bundle.provenance["c_m"] = PROVENANCE["c_m"]

    wanted = {1.0} | {float(m) for m in ms}
    if g is not None:
        wanted.add(g.q_plus + 1)
    for m in sorted(wanted):
        bundle.c(m)
        if sharpen or use_sharp:
            bundle.sharp[m] = sharp_embedding_constant(m, p.T, seed=seed)
    if sharpen or use_sharp:
        bundle.provenance["c_m_sharp"] = PROVENANCE["c_m_sharp"]

    if g is not None and h is not None:
        bundle.lambda_star = lambda_threshold(p, h, g, bundle)
        bundle.dual_lambda_star = dual_lambda_threshold(p, h, g, bundle)
        bundle.provenance["lambda_star"] = PROVENANCE["lambda_star"]
        bundle.provenance["dual_lambda_star"] = PROVENANCE["dual_lambda_star"]
    return bundle
