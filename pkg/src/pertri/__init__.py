"""Numerical ranges of periodic tridiagonal operators.

The closure of the numerical range of an (n+1)-periodic tridiagonal operator
with zero diagonal is compared, direction by direction, against the convex
hull of the numerical ranges of two finite symbol matrices.
"""

from .errors import HypothesisError, InputError, ParityError, PreconditionError, ShapeError
from .numrange import (
    SupportProfile,
    boundary_points,
    check_corollary,
    check_theorem,
    max_root_P,
    support_conv_union,
    support_function,
    support_profile,
    truncation_study,
)
from .period import (
    PeriodWords,
    build_A_pm,
    build_B1_pm,
    build_B_pm,
    build_truncation,
    hopping_sign,
    load_period,
    shift_words,
    symbol_coefficients,
    validate_period,
)
from .rng import SplitMix64

__version__ = "0.1.0"
