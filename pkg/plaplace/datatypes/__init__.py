# Core functionality that should always be available
from .config import Configuration, LabOptions, SamplingPlan, SolverOptions
from .errors import (
    AntiCoerciveError,
    ConfigError,
    ExpressionEvaluationError,
    ExpressionSyntaxError,
    InputShapeError,
    OraclePreconditionError,
    PLaplaceError,
    QuadratureAccuracyError,
    UnknownIdentifierError,
)
from .grid import ExponentField, GridFunction, ParameterFunction, WeightField
from .status import (
    DependenceVerdict,
    DualRegime,
    Regime,
    SolveOutcome,
    Trend,
    UniquenessVerdict,
)

__all__ = [
    "Configuration",
    "LabOptions",
    "SamplingPlan",
    "SolverOptions",
    "AntiCoerciveError",
    "ConfigError",
    "ExpressionEvaluationError",
    "ExpressionSyntaxError",
    "InputShapeError",
    "OraclePreconditionError",
    "PLaplaceError",
    "QuadratureAccuracyError",
    "UnknownIdentifierError",
    "ExponentField",
    "GridFunction",
    "ParameterFunction",
    "WeightField",
    "DependenceVerdict",
    "DualRegime",
    "Regime",
    "SolveOutcome",
    "Trend",
    "UniquenessVerdict",
]
