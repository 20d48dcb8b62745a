"""Exact verification of terminating q-hypergeometric summation formulas.

Evaluates both sides of each cataloged identity at random rational parameter
points in exact big-rational arithmetic and checks bit-for-bit equality.
"""

from qwatson._backend import BACKEND
from qwatson.catalog import (
    CATALOG,
    CATALOG_VERSION,
    IdentityCase,
    ParityCase,
    andrews_rhs,
    catalog_keys,
    cor_rhs,
    get_case,
    jain_rhs,
    lhs_eval,
    phi65_rhs,
    thm_rhs,
    unity_lhs,
)
from qwatson.errors import (
    ConstraintViolated,
    DegenerateDenominator,
    QWatsonError,
    ResampleBudgetExhausted,
    UnknownIdentity,
    UnsatisfiableConstraints,
)
from qwatson.exact import (
    ParamPoint,
    RationalValue,
    poch_fraction,
    qbinom,
    qpoch,
    qpoch_desc,
    qpow,
    rational_sqrt,
)
from qwatson.series import SeriesSpec, phi_eval, terminating_bound, weighted_sum
from qwatson.verify import (
    CheckResult,
    SampleConfig,
    VerificationReport,
    check_identity,
    run_suite,
    sample_point,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CATALOG",
    "CATALOG_VERSION",
    "CheckResult",
    "ConstraintViolated",
    "DegenerateDenominator",
    "IdentityCase",
    "ParamPoint",
    "ParityCase",
    "QWatsonError",
    "RationalValue",
    "ResampleBudgetExhausted",
    "SampleConfig",
    "SeriesSpec",
    "UnknownIdentity",
    "UnsatisfiableConstraints",
    "VerificationReport",
    "andrews_rhs",
    "catalog_keys",
    "check_identity",
    "cor_rhs",
    "get_case",
    "jain_rhs",
    "lhs_eval",
    "phi65_rhs",
    "phi_eval",
    "poch_fraction",
    "qbinom",
    "qpoch",
    "qpoch_desc",
    "qpow",
    "rational_sqrt",
    "run_suite",
    "sample_point",
    "terminating_bound",
    "thm_rhs",
    "unity_lhs",
    "weighted_sum",
    "__version__",
]
