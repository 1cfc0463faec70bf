import itertools
import logging

import numpy as np

from plaplace.datatypes import GridFunction, SolverOptions, UniquenessVerdict
from plaplace.energy import ProblemInstance
from plaplace.utils import emit_signal, h_norm, random_in_ball, run_jobs

from .report import UniquenessReport
from .solve import minimize

logger = logging.getLogger(__name__)


def uniqueness_radius(reports, opts: SolverOptions, T: int = 1) -> float:
    """
    10 sqrt(T) tol / mu, mu being the curvature estimate of the flattest run,
    floored at a few hundred ulps of the largest minimizer. The sqrt(T)
    converts the max-norm tolerance into a bound on the Euclidean gradient.
    """
    curvatures = [r.curvature for r in reports if r.curvature is not None]
    mu = min(curvatures) if curvatures else 1.0 / opts.initial_step
    largest = max((h_norm(r.minimizer) for r in reports), default=0.0)
    floor = 1e3 * np.finfo(float).eps * (1.0 + largest)
    return max(10.0 * np.sqrt(T) * opts.tol / mu, floor)


def multistart(inst: ProblemInstance, opts: SolverOptions = None, log_event=None) -> UniquenessReport:
    """
    Minimize from x0 = 0 and from `opts.starts` points drawn uniformly in the
    h_norm ball of radius `opts.radius`, then compare the minimizers.
    """
    opts = opts or SolverOptions()
    rng = np.random.default_rng(opts.seed)
    starts = [GridFunction.zeros(inst.T)]
    starts.extend(random_in_ball(inst.T, rng, opts.radius) for _ in range(opts.starts))

    jobs = [lambda x0=x0: minimize(inst, x0, opts) for x0 in starts]
    outcomes = run_jobs(jobs, workers=opts.workers, log_event=log_event)

    reports, indices, failures = [], [], []
    for idx, (ok, result) in enumerate(outcomes):
        if ok:
            reports.append(result)
            indices.append(idx)
        else:
            failures.append((idx, result))

    max_distance = 0.0
    for a, b in itertools.combinations(reports, 2):
        max_distance = max(max_distance, h_norm(a.minimizer - b.minimizer))
    radius = uniqueness_radius(reports, opts, inst.T)

    if failures or not all(r.converged for r in reports):
        verdict = UniquenessVerdict.DEGRADED
    elif max_distance <= radius:
        verdict = UniquenessVerdict.UNIQUE_CONSISTENT
    else:
        verdict = UniquenessVerdict.INCONSISTENT

    emit_signal(
        log_event,
        "info",
        f"Multistart over {len(starts)} starts: {verdict.value} (max distance {max_distance:.3e}, radius {radius:.3e})",
    )
    return UniquenessReport(reports, failures, max_distance, radius, verdict, indices=indices)
