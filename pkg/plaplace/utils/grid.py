import numpy as np

from plaplace.datatypes import GridFunction, InputShapeError


def forward_difference(x: GridFunction):
    """Entries x(i) - x(i-1) for i = 1..T+1."""
    return np.diff(x.values)


def h_norm(x: GridFunction):
    return float(np.linalg.norm(forward_difference(x)))


def sup_norm(x: GridFunction):
    return float(np.max(np.abs(x.interior)))


def summation_by_parts_defect(a, y: GridFunction):
    """
    Sum_{k=1}^{T+1} a(k-1) dy(k-1) + Sum_{k=1}^{T} (a(k) - a(k-1)) y(k).
    Vanishes up to roundoff for every a on Z[0, T] and every y in H.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or len(a) != y.T + 1:
        raise InputShapeError(
            f"Coefficient sequence must have T+1 = {y.T + 1} entries but got shape {a.shape}"
        )
    flux_term = np.dot(a, forward_difference(y))
    correction = np.dot(np.diff(a), y.interior)
    return float(flux_term + correction)


def random_grid_function(T: int, rng, scale: float = 1.0):
    return GridFunction.from_interior(scale * rng.standard_normal(T))


def random_in_ball(T: int, rng, radius: float):
    """Random point of the h_norm ball: Gaussian direction, radius drawn with density ~ r^(T-1)."""
    if radius == 0:
        return GridFunction.zeros(T)
    direction = random_grid_function(T, rng)
    norm = h_norm(direction)
    while norm == 0:
        direction = random_grid_function(T, rng)
        norm = h_norm(direction)
    r = radius * rng.uniform() ** (1.0 / T)
    return direction * (r / norm)
