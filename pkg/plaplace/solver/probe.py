from typing import NamedTuple

import numpy as np

from plaplace.datatypes import GridFunction, Trend
from plaplace.energy import ProblemInstance, energy
from plaplace.estimates import BoundCurve
from plaplace.utils import h_norm

# Samples at the tail of the ray that decide the trend
TREND_WINDOW = 5


class RayProbe(NamedTuple):
    ts: np.ndarray
    energies: np.ndarray
    bounds: np.ndarray  # NaN when the instance declares no growth data
    dominates: bool
    trend: Trend

    def to_dict(self):
        return {
            "t": self.ts.tolist(),
            "energy": self.energies.tolist(),
            "bound": self.bounds.tolist(),
            "dominates": self.dominates,
            "trend": self.trend.value,
        }


def coercivity_ray_probe(
    inst: ProblemInstance,
    direction: GridFunction,
    t_max: float,
    points: int = 50,
    bundle=None,
) -> RayProbe:
    """Sample J_u(t direction) on a log grid of t up to t_max and compare with the coercivity bound."""
    norm = h_norm(direction)
    if norm == 0:
        raise ValueError("The probe direction must be nonzero")
    if not t_max > 0:
        raise ValueError(f"t_max must be positive but got {t_max}")

    ts = np.geomspace(t_max * 1e-4, t_max, max(points, 2))
    with np.errstate(over="ignore", invalid="ignore"):
        energies = np.array([energy(inst, direction * t).total for t in ts])

    if inst.growth is not None:
        bounds = BoundCurve.from_instance(inst, bundle)(ts * norm)
        slack = 1e-10 * np.maximum(1.0, np.maximum(np.abs(energies), np.abs(bounds)))
        dominates = bool(np.all(energies >= bounds - slack))
    else:
        bounds = np.full(ts.shape, np.nan)
        dominates = True

    tail = np.diff(energies[-TREND_WINDOW:])
    if np.all(tail > 0):
        trend = Trend.UPWARD
    elif np.all(tail < 0):
        trend = Trend.DOWNWARD
    else:
        trend = Trend.FLAT
    return RayProbe(ts, energies, bounds, dominates, trend)
