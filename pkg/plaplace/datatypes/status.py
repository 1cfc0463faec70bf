from enum import Enum


# Regimes carry a label (used in reports/CSV) and the condition they encode
class Regime(Enum):
    STRICTLY_COERCIVE = ("StrictlyCoercive", "p- > q+ + 1")
    BORDERLINE_ADMISSIBLE = ("BorderlineAdmissible", "p- = q+ + 1 and lambda < lambda*")
    BORDERLINE_INADMISSIBLE = ("BorderlineInadmissible", "p- = q+ + 1 and lambda >= lambda*")
    NOT_COVERED = ("NotCovered", "p- < q+ + 1")
    UNKNOWN = ("Unknown", "no growth data declared")

    @property
    def label(self):
        return self.value[0]

    @property
    def covered(self):
        return self in (Regime.STRICTLY_COERCIVE, Regime.BORDERLINE_ADMISSIBLE)


class DualRegime(Enum):
    ANTI_COERCIVE = ("DualAntiCoercive", "q- + 1 > p+")
    BORDERLINE_ADMISSIBLE = ("DualBorderlineAdmissible", "q- + 1 = p+ and lambda > dual threshold")
    BORDERLINE_INADMISSIBLE = ("DualBorderlineInadmissible", "q- + 1 = p+ and lambda <= dual threshold")
    NOT_COVERED = ("DualNotCovered", "q- + 1 < p+")
    UNKNOWN = ("Unknown", "no growth data declared")

    @property
    def label(self):
        return self.value[0]

    @property
    def covered(self):
        return self in (DualRegime.ANTI_COERCIVE, DualRegime.BORDERLINE_ADMISSIBLE)


class UniquenessVerdict(Enum):
    UNIQUE_CONSISTENT = "unique-consistent"
    INCONSISTENT = "inconsistent"
    DEGRADED = "degraded"


class DependenceVerdict(Enum):
    CONVERGENT = "convergent"
    CONVERGENT_SUBSEQUENCE = "convergent-subsequence"
    NOT_CONVERGENT = "not-convergent"
    INCOMPLETE = "incomplete"


class Trend(Enum):
    UPWARD = "upward"  # Coercive evidence
    DOWNWARD = "downward"  # Anti-coercive evidence
    FLAT = "flat"


class SolveOutcome(Enum):
    CONVERGED = "converged"
    NOT_CONVERGED = "not-converged"
    ANTI_COERCIVE = "anti-coercive"
    FAILED = "failed"
