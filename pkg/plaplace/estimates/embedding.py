"""
Embedding constants c_m with

    sum_{k=1}^{T} |x(k)|^m <= c_m sum_{k=1}^{T+1} |dx(k-1)|^m   for x in H.

The provable value follows from telescoping x(k) = sum_{j<=k} dx(j-1) and
Hoelder's inequality: |x(k)|^m <= k^(m-1) sum_{j<=k} |dx(j-1)|^m, hence
c_m = sum_{k=1}^{T} k^(m-1). It holds for every m >= 1.
"""
import logging
from typing import NamedTuple

import numpy as np
from scipy import optimize

from plaplace.utils import powq, run_jobs

logger = logging.getLogger(__name__)

SHARP_MAX_T = 200


def embedding_constant(m: float, T: int) -> float:
    if m < 1:
        raise ValueError(f"Embedding constants need m >= 1 but got m = {m}")
    if T < 1:
        raise ValueError(f"T must be a positive integer but got {T}")
    return float(np.sum(np.arange(1, T + 1, dtype=float) ** (m - 1)))


class SharpSearch(NamedTuple):
    value: float
    converged: bool  # False means value is only a lower bound of the sharp constant
    starts: int


def embedding_ratio(interior, m: float) -> float:
    z = np.asarray(interior, dtype=float)
    d = np.diff(np.concatenate(([0.0], z, [0.0])))
    return float(np.sum(np.abs(z) ** m) / np.sum(np.abs(d) ** m))


def _neg_log_ratio(z, m):
    d = np.diff(np.concatenate(([0.0], z, [0.0])))
    top = np.sum(np.abs(z) ** m)
    bottom = np.sum(np.abs(d) ** m)
    if top == 0 or bottom == 0:
        return np.inf, np.zeros_like(z)

    grad_top = m * powq(z, m - 1)
    flux = m * powq(d, m - 1)
    grad_bottom = flux[:-1] - flux[1:]
    value = -(np.log(top) - np.log(bottom))
    return value, -(grad_top / top - grad_bottom / bottom)


def _starting_points(T, rng, n_random):
    k = np.arange(1, T + 1, dtype=float)
    starts = [np.sin(np.pi * k / (T + 1)), np.minimum(k, T + 1 - k)]
    starts.extend(rng.standard_normal(T) for _ in range(n_random))
    return [s / np.linalg.norm(np.diff(np.concatenate(([0.0], s, [0.0])))) for s in starts]


def _ascend(z0, m):
    res = optimize.minimize(
        _neg_log_ratio,
        z0,
        args=(m,),
        jac=True,
        method="L-BFGS-B",
        options={"gtol": 1e-12, "ftol": 1e-15, "maxiter": 5000},
    )
    # The ratio is scale invariant, so the start is a valid fallback
    best = res.x if embedding_ratio(res.x, m) >= embedding_ratio(z0, m) else z0
    return embedding_ratio(best, m), bool(res.success)


def sharp_embedding_search(m: float, T: int, n_random: int = 8, seed: int = 0, workers: int = 1):
    """
    Multistart ascent of sum|x|^m / sum|dx|^m over nonzero x. Each start is
    normalized to unit h_norm and improved with L-BFGS on the negative
    log-ratio; the best ratio found is returned.
    """
    if m < 1:
        raise ValueError(f"Embedding constants need m >= 1 but got m = {m}")
    if not 1 <= T <= SHARP_MAX_T:
        raise ValueError(f"Sharp constants are computed for 1 <= T <= {SHARP_MAX_T}, got T = {T}")

    rng = np.random.default_rng(seed)
    starts = _starting_points(T, rng, n_random)
    outcomes = run_jobs([lambda z0=z0: _ascend(z0, m) for z0 in starts], workers=workers)

    best, converged = 0.0, False
    for ok, result in outcomes:
        if not ok:
            continue
        value, success = result
        converged = converged or success
        best = max(best, value)

    # Never report more than the provable constant
    best = min(best, embedding_constant(m, T))
    if not converged:
        logger.warning(f"Sharp c_{m} search for T={T} did not converge; {best} is a lower bound")
    return SharpSearch(value=best, converged=converged, starts=len(starts))


def sharp_embedding_constant(m: float, T: int, seed: int = 0) -> float:
    return sharp_embedding_search(m, T, seed=seed).value


def laplacian_embedding_constant(T: int) -> float:
    """Exact sharp c_2: the inverse smallest eigenvalue of the Dirichlet difference Laplacian."""
    return 1.0 / (4.0 * np.sin(np.pi / (2 * (T + 1))) ** 2)
