import logging

import numpy as np

from plaplace.datatypes import SolveOutcome, SolverOptions, UniquenessVerdict
from plaplace.energy import ProblemInstance, strong_residual
from plaplace.estimates import compute_constants
from plaplace.nonlinearity import classify_regime
from plaplace.solver import multistart
from plaplace.utils import emit_signal, run_jobs

logger = logging.getLogger(__name__)


class SweepRow:
    __slots__ = (
        "lam",
        "regime",
        "outcome",
        "converged",
        "unique_consistent",
        "final_energy",
        "residual",
        "error",
    )

    def __init__(
        self,
        lam,
        regime="Unknown",
        outcome=SolveOutcome.FAILED,
        converged=False,
        unique_consistent=False,
        final_energy=np.nan,
        residual=np.nan,
        error=None,
    ):
        self.lam = float(lam)
        self.regime = regime
        self.outcome = outcome
        self.converged = bool(converged)
        self.unique_consistent = bool(unique_consistent)
        self.final_energy = float(final_energy)
        self.residual = float(residual)
        self.error = error

    def to_dict(self):
        return {
            "lambda": self.lam,
            "regime": self.regime,
            "outcome": self.outcome.value,
            "converged": self.converged,
            "unique_consistent": self.unique_consistent,
            "final_energy": self.final_energy,
            "residual": self.residual,
            "error": self.error,
        }


def _sweep_row(inst: ProblemInstance, lam: float, opts: SolverOptions) -> SweepRow:
    row = SweepRow(lam)
    if inst.growth is not None:
        bundle = compute_constants(inst.p, inst.h, inst.growth)
        row.regime = classify_regime(inst.p, inst.growth, inst.lam, bundle).primal.label

    uniqueness = multistart(inst, opts)
    row.unique_consistent = uniqueness.verdict == UniquenessVerdict.UNIQUE_CONSISTENT

    # The run from x0 = 0 carries the row's energy and residual
    primary = uniqueness.primary
    if primary is not None:
        row.converged = primary.converged
        row.final_energy = primary.energy
        row.residual = float(np.max(np.abs(strong_residual(inst, primary.minimizer))))

    if uniqueness.anti_coercive:
        row.outcome = SolveOutcome.ANTI_COERCIVE
        row.error = str(uniqueness.failures[0][1])
    elif uniqueness.failures:
        row.outcome = SolveOutcome.FAILED
        row.error = str(uniqueness.failures[0][1])
    else:
        row.outcome = SolveOutcome.CONVERGED if row.converged else SolveOutcome.NOT_CONVERGED
    return row


def regime_sweep(template, lambdas, opts: SolverOptions = None, workers: int = 1, log_event=None):
    """
    One row per lambda, sorted ascending. `template` is a ProblemInstance
    (its lambda is replaced) or a callable lambda -> ProblemInstance.
    """
    opts = opts or SolverOptions()
    lambdas = sorted(float(lam) for lam in lambdas)
    if not lambdas:
        raise ValueError("The lambda grid must be nonempty")

    if isinstance(template, ProblemInstance):
        build = template.with_lambda
    else:
        build = template

    jobs = [lambda lam=lam: _sweep_row(build(lam), lam, opts) for lam in lambdas]
    rows = []
    for lam, (ok, result) in zip(lambdas, run_jobs(jobs, workers=workers, log_event=log_event)):
        if ok:
            rows.append(result)
        else:
            emit_signal(log_event, "warning", f"Sweep row lambda={lam} failed: {result}")
            rows.append(SweepRow(lam, error=str(result)))
    return rows
