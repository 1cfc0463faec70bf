"""
Loading and validation of JSON config documents. Every failure is collected
with the path of the offending entry and raised together as a ConfigError.
"""
import json
from pathlib import Path

import numpy as np

from plaplace.datatypes import (
    ConfigError,
    ExponentField,
    LabOptions,
    ParameterFunction,
    SamplingPlan,
    SolverOptions,
    WeightField,
)
from plaplace.energy import ProblemInstance
from plaplace.lab import DependencePlan, make_schedule
from plaplace.nonlinearity import CanonicalFamily, ExpressionNonlinearity, GrowthData

TOP_LEVEL_KEYS = {"T", "p", "h", "lambda", "f", "u", "solver", "sampling", "lab", "dependence", "sweep"}
CANONICAL_KEYS = {"family", "a", "b", "q", "rho"}
EXPRESSION_KEYS = {"family", "f", "F", "growth"}
GENERATORS = ("constant", "linear", "sine")
FIELDS = {"p": ExponentField, "h": WeightField}


def load_document(path):
    path = Path(path)
    try:
        with open(path) as f:
            doc = json.load(f)
    except OSError as e:
        raise ConfigError([f"{path}: cannot read ({e.strerror})"])
    except json.JSONDecodeError as e:
        raise ConfigError([f"{path}: invalid JSON ({e.msg} at line {e.lineno}, column {e.colno})"])
    if not isinstance(doc, dict):
        raise ConfigError([f"{path}: the document must be a JSON object"])
    return doc


def make_parameter(T: int, source):
    """Explicit array or scalar, or a named generator over k = 1..T."""
    if not isinstance(source, dict):
        return ParameterFunction(T, source)

    params = dict(source)
    kind = params.pop("generator", None)
    k = np.arange(1, T + 1, dtype=float)
    if kind == "constant":
        return ParameterFunction(T, float(params.pop("value", 0.0)) * np.ones(T))
    if kind == "linear":
        start, stop = float(params.pop("start", 0.0)), float(params.pop("stop", 1.0))
        return ParameterFunction(T, np.linspace(start, stop, T))
    if kind == "sine":
        amplitude = float(params.pop("amplitude", 1.0))
        frequency = float(params.pop("frequency", 1.0))
        phase = float(params.pop("phase", 0.0))
        return ParameterFunction(T, amplitude * np.sin(np.pi * frequency * k / (T + 1) + phase))
    if kind is None:
        raise ValueError(f"generator is required; expected one of {', '.join(GENERATORS)}")
    raise ValueError(f"unknown generator {kind!r}; expected one of {', '.join(GENERATORS)}")


def _make_nonlinearity(T, block, errors):
    if not isinstance(block, dict):
        errors.append("f: must be an object with a 'family' entry")
        return None

    family = block.get("family")
    if family == "canonical":
        unknown = set(block) - CANONICAL_KEYS
        if unknown:
            errors.append(f"f: unknown keys {', '.join(sorted(unknown))}")
            return None
        try:
            return CanonicalFamily(
                T,
                a=block.get("a", 0.0),
                b=block.get("b", 1.0),
                q=block.get("q", 1.0),
                rho=block.get("rho", 0.0),
            )
        except (ValueError, TypeError) as e:
            errors.append(f"f: {e}")
            return None

    if family == "expression":
        unknown = set(block) - EXPRESSION_KEYS
        if unknown:
            errors.append(f"f: unknown keys {', '.join(sorted(unknown))}")
            return None
        growth = None
        if block.get("growth") is not None:
            try:
                g = block["growth"]
                growth = GrowthData(T, g.get("a", 0.0), g.get("b", 0.0), g.get("q", 1.0))
            except (ValueError, TypeError, AttributeError) as e:
                errors.append(f"f.growth: {e}")
        if "f" not in block:
            errors.append("f.f: an expression for f is required")
            return None
        try:
            return ExpressionNonlinearity(block["f"], block.get("F"), growth=growth, T=T)
        except (ValueError, TypeError) as e:
            errors.append(f"f: {e}")
            return None

    errors.append(f"f.family: expected 'canonical' or 'expression' but got {family!r}")
    return None


def _make_options(cls, name, block, errors):
    try:
        return cls.from_dict(block or {})
    except (KeyError, ValueError, TypeError) as e:
        message = e.args[0] if isinstance(e, KeyError) else str(e)
        errors.append(f"{name}: {message}")
        return cls()


class Experiment:
    """A validated config document."""

    def __init__(self, instance, solver, sampling, lab, dependence=None, sweep=None, source=None):
        self.instance = instance
        self.solver = solver
        self.sampling = sampling
        self.lab = lab
        self.dependence = dependence
        self.sweep = sweep
        self.source = source


def build_experiment(doc: dict, source=None) -> Experiment:
    errors = []
    unknown = set(doc) - TOP_LEVEL_KEYS
    if unknown:
        errors.append(f"unknown keys {', '.join(sorted(unknown))}")

    T = doc.get("T")
    if not isinstance(T, int) or isinstance(T, bool) or T < 1:
        raise ConfigError(errors + [f"T: must be a positive integer but got {T!r}"])

    parts = {}
    for key in ("p", "h"):
        if key not in doc:
            errors.append(f"{key}: required")
            continue
        try:
            field = FIELDS[key](T, doc[key])
            parts[key] = field
        except (ValueError, TypeError) as e:
            errors.append(f"{key}: {e}")

    lam = doc.get("lambda")
    if not isinstance(lam, (int, float)) or isinstance(lam, bool) or not lam > 0:
        errors.append(f"lambda: must be a positive number but got {lam!r}")

    f = _make_nonlinearity(T, doc.get("f"), errors) if "f" in doc else None
    if "f" not in doc:
        errors.append("f: required")

    u = None
    try:
        u = make_parameter(T, doc.get("u", 0.0))
    except (ValueError, TypeError) as e:
        errors.append(f"u: {e}")

    solver = _make_options(SolverOptions, "solver", doc.get("solver"), errors)
    sampling = _make_options(SamplingPlan, "sampling", doc.get("sampling"), errors)
    lab = _make_options(LabOptions, "lab", doc.get("lab"), errors)

    if errors:
        raise ConfigError(errors)

    instance = ProblemInstance(T, parts["p"], parts["h"], lam, f, u)
    experiment = Experiment(instance, solver, sampling, lab, source=source)

    if "dependence" in doc:
        try:
            experiment.dependence = _make_dependence(instance, doc["dependence"])
        except (ValueError, TypeError, KeyError) as e:
            errors.append(f"dependence: {e}")
    if "sweep" in doc:
        try:
            experiment.sweep = _make_sweep(doc["sweep"])
        except (ValueError, TypeError, KeyError) as e:
            errors.append(f"sweep: {e}")

    if errors:
        raise ConfigError(errors)
    return experiment


def _make_dependence(instance, block):
    block = dict(block)
    direction = make_parameter(instance.T, block.pop("direction", 1.0))
    schedule = block.pop("schedule", "harmonic")
    N = block.pop("N", None)
    ratio = block.pop("ratio", 0.5)
    if block:
        raise ValueError(f"unknown keys {', '.join(sorted(block))}")

    if isinstance(schedule, str):
        if N is None:
            raise ValueError("N is required with a named schedule")
        deltas = make_schedule(schedule, int(N), float(ratio))
    else:
        deltas = np.asarray(schedule, dtype=float)
        if N is not None and int(N) != len(deltas):
            raise ValueError(f"N = {N} does not match the {len(deltas)} listed deltas")
    return DependencePlan(instance, direction, deltas)


def _make_sweep(block):
    block = dict(block)
    if "lambdas" in block:
        lambdas = [float(v) for v in block.pop("lambdas")]
    else:
        start, stop = float(block.pop("start")), float(block.pop("stop"))
        num = int(block.pop("num"))
        spacing = block.pop("spacing", "linear")
        if spacing == "linear":
            lambdas = np.linspace(start, stop, num).tolist()
        elif spacing == "log":
            lambdas = np.geomspace(start, stop, num).tolist()
        else:
            raise ValueError(f"spacing must be 'linear' or 'log' but got {spacing!r}")
    if block:
        raise ValueError(f"unknown keys {', '.join(sorted(block))}")
    if not lambdas:
        raise ValueError("the lambda grid must be nonempty")
    if any(not lam > 0 for lam in lambdas):
        raise ValueError("every lambda must be positive")
    return lambdas


def load_experiment(path) -> Experiment:
    return build_experiment(load_document(path), source=str(path))
