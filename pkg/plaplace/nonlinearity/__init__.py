# Core functionality that should always be available
from .base import Nonlinearity, eval_F, eval_f
from .canonical import CanonicalFamily
from .expression import (
    ExpressionNonlinearity,
    evaluate,
    free_variables,
    parse_expression,
    to_source,
)
from .growth import GrowthData, broadcast_nodes
from .hypotheses import (
    GrowthViolation,
    MonotonicityViolation,
    NontrivialityResult,
    check_H1,
    check_H2,
    check_H3,
    check_H4,
)
from .regime import RegimeClassification, classify_regime

__all__ = [
    "Nonlinearity",
    "eval_F",
    "eval_f",
    "CanonicalFamily",
    "ExpressionNonlinearity",
    "evaluate",
    "free_variables",
    "parse_expression",
    "to_source",
    "GrowthData",
    "broadcast_nodes",
    "GrowthViolation",
    "MonotonicityViolation",
    "NontrivialityResult",
    "check_H1",
    "check_H2",
    "check_H3",
    "check_H4",
    "RegimeClassification",
    "classify_regime",
]
