"""Exact construction and verification of degenerate special-polynomial families.

The package works entirely in the ring Q[l, x] (``l`` the deformation
parameter, ``x`` the polynomial argument) via truncated exponential
generating functions with exact rational arithmetic.  See ``families``
for the catalog of builders and ``identities`` for the verification suite.
"""

from .bipoly import BiPoly, binomial, factorial, rational_str
from .series import (
    BadConstantTerm,
    DivisionByNonUnit,
    EgfSeries,
    IndexBeyondTruncation,
    NonzeroConstantInner,
    NonzeroLowOrder,
    SeriesError,
)
from .families import (
    Argument,
    FamilyId,
    FamilySpec,
    LambdaMode,
    UnsupportedOrder,
    build_egf,
    central_factorial_power,
    classical_value,
    deg_bernoulli2_alt_egf,
    deg_falling_factorial,
    falling_factorial,
    list_families,
    triangular_numbers,
)
from .identities import (
    Case,
    IdentityId,
    UnknownIdentity,
    VerificationReport,
    eq21_rhs_term,
    verify,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "binomial",
    "factorial",
    "rational_str",
    "EgfSeries",
    "SeriesError",
    "DivisionByNonUnit",
    "NonzeroLowOrder",
    "NonzeroConstantInner",
    "BadConstantTerm",
    "IndexBeyondTruncation",
    "FamilyId",
    "FamilySpec",
    "Argument",
    "LambdaMode",
    "UnsupportedOrder",
    "build_egf",
    "triangular_numbers",
    "falling_factorial",
    "deg_falling_factorial",
    "central_factorial_power",
    "classical_value",
    "deg_bernoulli2_alt_egf",
    "list_families",
    "IdentityId",
    "UnknownIdentity",
    "Case",
    "VerificationReport",
    "verify",
    "verify_all",
    "eq21_rhs_term",
    "__version__",
]
