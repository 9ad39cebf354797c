"""catmot: exact Catalan and Motzkin numbers, a catalog of their integral
representations, generic Catalan-to-Motzkin transforms, and the quadrature
machinery to verify every representation against the exact values.
"""

__version__ = "0.1.0"

from .catalog import (
    Family,
    Representation,
    Singularity,
    VerificationRow,
    evaluate_integrand,
    get_representation,
    list_representations,
    verify,
)
from .exact import ExactInteger, binomial, catalan, motzkin, motzkin_oracle
from .quadrature import (
    QuadConfig,
    QuadratureResult,
    adaptive_gk,
    gauss_chebyshev_first,
    gauss_chebyshev_second,
    integrate_semi_infinite,
    tanh_sinh,
)
from .transform import (
    CatalanForm,
    ComparisonMode,
    PhiEvaluator,
    check_lemma1,
    check_transform_consistency,
    psi_difference,
    transform_phi,
    transform_simple,
)

__all__ = [
    "CatalanForm",
    "ComparisonMode",
    "ExactInteger",
    "Family",
    "PhiEvaluator",
    "QuadConfig",
    "QuadratureResult",
    "Representation",
    "Singularity",
    "VerificationRow",
    "__version__",
    "adaptive_gk",
    "binomial",
    "catalan",
    "check_lemma1",
    "check_transform_consistency",
    "evaluate_integrand",
    "gauss_chebyshev_first",
    "gauss_chebyshev_second",
    "get_representation",
    "integrate_semi_infinite",
    "list_representations",
    "motzkin",
    "motzkin_oracle",
    "psi_difference",
    "tanh_sinh",
    "transform_phi",
    "transform_simple",
    "verify",
]
