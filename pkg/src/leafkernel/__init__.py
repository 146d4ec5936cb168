"""Leaf functions sleaf_n, cleaf_n, their inverse, and identity checks."""

from .core import (
    REDUCTION_LIMIT,
    BranchCase,
    Case,
    LeafArg,
    LeafValue,
    arcsleaf,
    classify,
    cleaf,
    reduce_arg,
    sign_cleaf_prime,
    sign_sleaf_prime,
    sleaf,
)
from .errors import (
    ArgumentRangeError,
    BracketError,
    ConvergenceError,
    DomainError,
    IdentityViolation,
    LeafError,
    PeriodDetectionError,
    StiffnessError,
)
from .identities import (
    cleaf3_add_squared,
    cleaf3_double,
    sleaf3_add,
    sleaf3_add_squared,
    sleaf3_double,
)
from .numerics import DEFAULT_SPEC, PeriodConstants, QuadratureSpec, period_constants

__version__ = "0.1.0"

__all__ = [
    "REDUCTION_LIMIT",
    "BranchCase",
    "Case",
    "LeafArg",
    "LeafValue",
    "arcsleaf",
    "classify",
    "cleaf",
    "reduce_arg",
    "sign_cleaf_prime",
    "sign_sleaf_prime",
    "sleaf",
    "ArgumentRangeError",
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "IdentityViolation",
    "LeafError",
    "PeriodDetectionError",
    "StiffnessError",
    "cleaf3_add_squared",
    "cleaf3_double",
    "sleaf3_add",
    "sleaf3_add_squared",
    "sleaf3_double",
    "DEFAULT_SPEC",
    "PeriodConstants",
    "QuadratureSpec",
    "period_constants",
]
