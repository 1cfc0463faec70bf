import json

import numpy as np
import pytest

from plaplace.datatypes import GridFunction, SolverOptions
from plaplace.energy import ProblemInstance
from plaplace.nonlinearity import CanonicalFamily

# Exact minimizer of the linear T=3 instance
LINEAR_SOLUTION = np.array([0.0, 1.5, 2.0, 1.5, 0.0])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def linear_instance():
    """T=3, p=2, h=1, lambda=1, f=1."""
    return ProblemInstance(3, 2.0, 1.0, 1.0, CanonicalFamily(3, a=0.0, b=1.0, q=1.0, rho=0.0))


@pytest.fixture
def borderline_instance():
    """T=3, p=2, q=1, a=1, h=1: lambda* = 1/6."""
    return ProblemInstance(3, 2.0, 1.0, 0.1, CanonicalFamily(3, a=1.0, b=1.0, q=1.0))


@pytest.fixture
def zero_instance():
    return ProblemInstance(3, 2.0, 1.0, 1.0, CanonicalFamily(3, a=0.0, b=0.0))


@pytest.fixture
def bump():
    return GridFunction(3, [0.0, 1.0, 2.0, 1.0, 0.0])


@pytest.fixture
def tight_opts():
    return SolverOptions(tol=1e-12)


def random_canonical_instance(rng, T=None, p_range=(1.5, 4.0), lam=None):
    T = int(rng.integers(2, 51)) if T is None else T
    f = CanonicalFamily(
        T,
        a=rng.uniform(0.0, 1.0, T),
        b=rng.uniform(-2.0, 2.0, T),
        q=rng.uniform(1.0, 3.0, T),
        rho=rng.uniform(0.0, 0.9),
    )
    return ProblemInstance(
        T,
        rng.uniform(*p_range, T + 2),
        rng.uniform(0.5, 2.0, T + 2),
        rng.uniform(0.1, 3.0) if lam is None else lam,
        f,
        rng.uniform(-3.0, 3.0, T),
    )


def separated_point(T, rng, gap=0.1):
    """Random grid function whose differences all satisfy |dx| >= gap."""
    while True:
        d = rng.choice([-1.0, 1.0], T) * rng.uniform(gap, 1.5, T)
        if abs(d.sum()) >= gap:
            return GridFunction.from_interior(np.cumsum(d))


@pytest.fixture
def write_config(tmp_path):
    def _write(doc, name="problem.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


@pytest.fixture
def linear_config():
    return {
        "T": 3,
        "p": 2,
        "h": 1,
        "lambda": 1,
        "f": {"family": "canonical", "a": 0, "b": 1, "q": 1, "rho": 0},
        "u": 0,
        "solver": {"starts": 3},
    }
