import logging
from typing import NamedTuple

import numpy as np

from plaplace.constants import NONPOSITIVITY_SLACK
from plaplace.datatypes import GridFunction, LabOptions
from plaplace.energy import ProblemInstance, energy
from plaplace.estimates import BoundCurve
from plaplace.utils import h_norm, sup_norm

logger = logging.getLogger(__name__)


class BoundViolation(NamedTuple):
    sample: int
    norm: float
    energy: float
    bound: float


def probe_points(T: int, rng, samples: int, min_norm: float, max_norm: float):
    """
    Gaussian interior values rescaled to h_norm log-uniform in [min_norm, max_norm].
    Points with sup_norm below 1 are scaled up until it reaches 1, which keeps
    h_norm >= min_norm >= 1.
    """
    for _ in range(samples):
        x = GridFunction.from_interior(rng.standard_normal(T))
        while h_norm(x) == 0:
            x = GridFunction.from_interior(rng.standard_normal(T))
        target = np.exp(rng.uniform(np.log(min_norm), np.log(max_norm)))
        x = x * (target / h_norm(x))
        if sup_norm(x) < 1:
            x = x / sup_norm(x)
        yield x


def probe_energy_bound(inst: ProblemInstance, bundle=None, samples: int = None, opts: LabOptions = None):
    """Random points where J_u(x) < B(h_norm(x)); an empty list means the bound held."""
    opts = opts or LabOptions()
    samples = opts.probe_samples if samples is None else int(samples)
    curve = BoundCurve.from_instance(inst, bundle)
    rng = np.random.default_rng(opts.seed)

    violations = []
    points = probe_points(inst.T, rng, samples, opts.probe_min_norm, opts.probe_max_norm)
    for idx, x in enumerate(points):
        r = h_norm(x)
        value = energy(inst, x).total
        bound = float(curve(r))
        if value < bound - 1e-10 * max(1.0, abs(value), abs(bound)):
            violations.append(BoundViolation(idx, r, value, bound))

    if violations:
        logger.warning(f"Coercivity bound violated at {len(violations)} of {samples} probes")
    return violations


def minimum_nonpositivity_check(inst: ProblemInstance, report) -> bool:
    """The minimum of J_u never exceeds J_u(0) = 0."""
    if not report.converged:
        raise ValueError("The nonpositivity check needs a converged report")
    return energy(inst, report.minimizer).total <= NONPOSITIVITY_SLACK
