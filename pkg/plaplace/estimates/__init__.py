# Core functionality that should always be available
from .bound import BoundCurve, a_priori_radius
from .bundle import ConstantsBundle, compute_constants
from .coercivity import (
    coercivity_constants,
    norm_relation_check,
    norm_relation_coefficients,
)
from .embedding import (
    SharpSearch,
    embedding_constant,
    embedding_ratio,
    laplacian_embedding_constant,
    sharp_embedding_constant,
    sharp_embedding_search,
)
from .thresholds import dual_lambda_threshold, lambda_threshold

__all__ = [
    "BoundCurve",
    "a_priori_radius",
    "ConstantsBundle",
    "compute_constants",
    "coercivity_constants",
    "norm_relation_check",
    "norm_relation_coefficients",
    "SharpSearch",
    "embedding_constant",
    "embedding_ratio",
    "laplacian_embedding_constant",
    "sharp_embedding_constant",
    "sharp_embedding_search",
    "dual_lambda_threshold",
    "lambda_threshold",
]
