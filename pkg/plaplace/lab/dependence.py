"""
Continuous dependence of the solution x_u on the parameter u: solve along
u_n = u_bar + delta_n v and compare with the solution at u_bar.
"""
import logging

import numpy as np

from plaplace.datatypes import (
    DependenceVerdict,
    LabOptions,
    ParameterFunction,
    SolverOptions,
)
from plaplace.energy import ProblemInstance, strong_residual
from plaplace.solver import minimize
from plaplace.utils import emit_signal, h_norm, run_jobs

logger = logging.getLogger(__name__)

SCHEDULES = ("harmonic", "geometric", "zero")


def make_schedule(kind: str, N: int, ratio: float = 0.5):
    """delta_n for n = 1..N."""
    n = np.arange(1, N + 1, dtype=float)
    if kind == "harmonic":
        return 1.0 / n
    if kind == "geometric":
        if not 0 < ratio < 1:
            raise ValueError(f"Geometric schedules need 0 < ratio < 1 but got {ratio}")
        return ratio**n
    if kind == "zero":
        return np.zeros(N)
    raise ValueError(f"Unknown schedule {kind!r}; expected one of {', '.join(SCHEDULES)}")


class DependencePlan:
    def __init__(self, instance: ProblemInstance, direction, deltas):
        self.instance = instance
        if isinstance(direction, ParameterFunction):
            self.direction = direction
        else:
            self.direction = ParameterFunction(instance.T, direction)
        if self.direction.T != instance.T:
            raise ValueError(f"direction has T={self.direction.T} but the instance has T={instance.T}")

        self.deltas = np.asarray(deltas, dtype=float)
        if self.deltas.ndim != 1 or len(self.deltas) < 3:
            raise ValueError(f"A dependence plan needs N >= 3 members but got {self.deltas.size}")
        if np.any(self.deltas < 0) or not np.all(np.isfinite(self.deltas)):
            raise ValueError("delta_n must be finite and nonnegative")
        if np.any(np.diff(self.deltas) > 0):
            raise ValueError("delta_n must be nonincreasing")

    @classmethod
    def from_schedule(cls, instance, direction, kind: str, N: int, ratio: float = 0.5):
        return cls(instance, direction, make_schedule(kind, N, ratio))

    @property
    def N(self):
        return len(self.deltas)

    def member(self, n: int) -> ProblemInstance:
        """The instance with u_n = u_bar + delta_n v, n = 1..N."""
        return self.instance.with_parameter(self.instance.u.shifted(self.direction, self.deltas[n - 1]))


class DependenceRecord:
    __slots__ = ("n", "delta", "norm", "distance", "converged", "error")

    def __init__(self, n, delta, norm=np.nan, distance=np.nan, converged=False, error=None):
        self.n = int(n)
        self.delta = float(delta)
        self.norm = float(norm)
        self.distance = float(distance)
        self.converged = bool(converged)
        self.error = error

    def to_dict(self):
        return {
            "n": self.n,
            "delta_n": self.delta,
            "norm_xn": self.norm,
            "dist_to_limit": self.distance,
            "converged": self.converged,
        }


class DependenceReport:
    def __init__(self, records, limit, limit_residual, gamma, verdict, failing=()):
        self.records = list(records)
        self.limit = limit
        self.limit_residual = float(limit_residual)
        self.gamma = float(gamma)
        self.verdict = verdict
        self.failing = list(failing)

    @property
    def distances(self):
        return np.array([r.distance for r in self.records])

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "gamma": self.gamma,
            "limit": None if self.limit is None else self.limit.values.tolist(),
            "limit_residual": self.limit_residual,
            "failing": self.failing,
            "records": [r.to_dict() for r in self.records],
        }


def _converges(distances, tolerance, scale):
    if distances.size == 0:
        return False
    last = distances[-1]
    slack = 1e-8 * scale
    return last <= tolerance * scale and last <= np.min(distances) + slack


def run_dependence(
    plan: DependencePlan, opts: SolverOptions = None, lab_opts: LabOptions = None, log_event=None
) -> DependenceReport:
    """
    Solve at u_bar and at every u_n. The sequence is declared convergent when
    the last distance is within `dependence_tolerance * max(1, h_norm(x_bar))`
    and no earlier member is closer. If some members stall without failing,
    the test is applied to the converged members only (a subsequence).
    """
    opts = opts or SolverOptions()
    lab_opts = lab_opts or LabOptions()
    base = plan.instance

    try:
        limit_report = minimize(base, None, opts)
    except Exception as e:
        emit_signal(log_event, "error", f"Limit solve at u_bar failed: {e}")
        records = [DependenceRecord(n, d, error=str(e)) for n, d in enumerate(plan.deltas, start=1)]
        return DependenceReport(records, None, np.nan, np.nan, DependenceVerdict.INCOMPLETE, failing=[0])

    x_bar = limit_report.minimizer
    limit_residual = float(np.max(np.abs(strong_residual(base, x_bar))))
    scale = max(1.0, h_norm(x_bar))

    jobs = [lambda n=n: minimize(plan.member(n), None, opts) for n in range(1, plan.N + 1)]
    outcomes = run_jobs(jobs, workers=opts.workers, log_event=log_event)

    records, failing, stalled = [], [], []
    for n, (ok, result) in enumerate(outcomes, start=1):
        delta = plan.deltas[n - 1]
        if not ok:
            failing.append(n)
            records.append(DependenceRecord(n, delta, error=str(result)))
            continue
        x_n = result.minimizer
        records.append(
            DependenceRecord(n, delta, h_norm(x_n), h_norm(x_n - x_bar), converged=result.converged)
        )
        if not result.converged:
            stalled.append(n)

    good = [r for r in records if r.converged]
    gamma = max((r.norm for r in good), default=np.nan)
    distances = np.array([r.distance for r in good])

    if failing or not limit_report.converged:
        verdict = DependenceVerdict.INCOMPLETE
        if not limit_report.converged:
            failing.insert(0, 0)
    elif not _converges(distances, lab_opts.dependence_tolerance, scale):
        verdict = DependenceVerdict.INCOMPLETE if stalled else DependenceVerdict.NOT_CONVERGENT
    elif stalled:
        verdict = DependenceVerdict.CONVERGENT_SUBSEQUENCE
    else:
        verdict = DependenceVerdict.CONVERGENT

    emit_signal(log_event, "info", f"Dependence over {plan.N} members: {verdict.value} (gamma {gamma:.6e})")
    return DependenceReport(records, x_bar, limit_residual, gamma, verdict, failing=failing)
