"""
Sampled checks of the growth (H1), monotonicity (H2/H4) and nontriviality
(H3) hypotheses. Checks cover the sampled box only; a clean result is
evidence, not proof, over unbounded domains.
"""
from typing import NamedTuple

import numpy as np

from plaplace.constants import GROWTH_SLACK, MONOTONE_SLACK
from plaplace.datatypes import ExpressionEvaluationError, SamplingPlan

from .base import Nonlinearity
from .growth import GrowthData


class GrowthViolation(NamedTuple):
    k: int
    x: float
    u: float
    lhs: float
    rhs: float


class MonotonicityViolation(NamedTuple):
    k: int
    u: float
    x1: float
    x2: float
    f1: float
    f2: float


class NontrivialityResult(NamedTuple):
    holds: bool
    witness: int  # First node with f(k, 0, u) != 0 for all sampled u, or None
    failures: list  # (k, u) pairs where f(k, 0, u) vanishes, first per node

    def __bool__(self):
        return self.holds


def _sample_grid(T, plan):
    ks = np.arange(1, T + 1)
    return ks[:, None, None], plan.x_samples()[None, :, None], plan.u_samples()[None, None, :]


def _sampled_values(n: Nonlinearity, ks, xs, us):
    """
    f over the broadcast sample grid. Points where f cannot be evaluated
    come back as NaN, and callers count them as violations.
    """
    shape = np.broadcast_shapes(np.shape(ks), np.shape(xs), np.shape(us))
    try:
        return np.broadcast_to(np.asarray(n.values(ks, xs, us), dtype=float), shape)
    except ExpressionEvaluationError:
        pass

    ks, xs, us = np.broadcast_arrays(ks, xs, us)
    out = np.full(shape, np.nan)
    for idx in np.ndindex(shape):
        try:
            out[idx] = n.values(ks[idx], xs[idx], us[idx])
        except ExpressionEvaluationError:
            continue
    return out


def check_H1(n: Nonlinearity, g: GrowthData, plan: SamplingPlan = None):
    """Points of the sampling box where |f| exceeds a|x|^q + b."""
    plan = plan or SamplingPlan()
    ks, xs, us = _sample_grid(g.T, plan)
    lhs = np.abs(_sampled_values(n, ks, xs, us))
    rhs = np.broadcast_to(g.bound(ks, xs), lhs.shape)
    bad = (lhs > rhs + GROWTH_SLACK * (1.0 + np.abs(rhs))) | np.isnan(lhs)

    violations = []
    for i, j, m in zip(*np.nonzero(bad)):
        violations.append(
            GrowthViolation(
                k=int(i + 1),
                x=float(xs[0, j, 0]),
                u=float(us[0, 0, m]),
                lhs=float(lhs[i, j, m]),
                rhs=float(rhs[i, j, m]),
            )
        )
    return violations


def check_H2(n: Nonlinearity, T: int, plan: SamplingPlan = None):
    """Adjacent sample pairs x1 < x2 with f(k, x1, u) < f(k, x2, u)."""
    plan = plan or SamplingPlan()
    ks, xs, us = _sample_grid(T, plan)
    vals = _sampled_values(n, ks, xs, us)
    rise = vals[:, 1:, :] - vals[:, :-1, :]
    scale = 1.0 + np.maximum(np.abs(vals[:, 1:, :]), np.abs(vals[:, :-1, :]))
    bad = (rise > MONOTONE_SLACK * scale) | np.isnan(rise)

    violations = []
    for i, j, m in zip(*np.nonzero(bad)):
        violations.append(
            MonotonicityViolation(
                k=int(i + 1),
                u=float(us[0, 0, m]),
                x1=float(xs[0, j, 0]),
                x2=float(xs[0, j + 1, 0]),
                f1=float(vals[i, j, m]),
                f2=float(vals[i, j + 1, m]),
            )
        )
    return violations


def check_H4(n: Nonlinearity, T: int, plan: SamplingPlan = None):
    """The dual-mode monotonicity hypothesis; stated with the same wording as H2."""
    return check_H2(n, T, plan)


def check_H3(n: Nonlinearity, T: int, u_samples):
    u_samples = np.atleast_1d(np.asarray(u_samples, dtype=float))
    if u_samples.size == 0:
        raise ValueError("u_samples must be nonempty")

    ks = np.arange(1, T + 1)[:, None]
    at_zero = _sampled_values(n, ks, 0.0, u_samples[None, :])

    witness = None
    failures = []
    for i in range(T):
        vanishing = np.flatnonzero((at_zero[i] == 0) | np.isnan(at_zero[i]))
        if vanishing.size == 0:
            if witness is None:
                witness = i + 1
        else:
            failures.append((i + 1, float(u_samples[vanishing[0]])))

    return NontrivialityResult(holds=witness is not None, witness=witness, failures=failures)
