"""Exact Hecke operators U_n, V_n on truncated power series and hypergeometric functions."""

from .errors import (
    BadExponent,
    DivisibleJ,
    DivisionByZero,
    HeckeError,
    IllegalParameter,
    InsufficientOrder,
    LengthMismatch,
    NotDivisibleJ,
    OracleMismatch,
    ParseError,
    Unbalanced,
)
from .hecke import apply_un, parameter_sum_shift
from .hypergeometric import (
    HypSeries,
    PochSplitOffset,
    canonicalize,
    coefficient,
    expand,
    pochhammer,
    pochhammer_split,
    pochhammer_split_offset,
)
from .multiplicative import CMReport, CMVerdict, classify_cm, hyp_coeff_sequence, test_complete_multiplicativity
from .scalar import GQ, GaussianRational, format_scalar, gq, parse_scalar, scalar_arith
from .series import (
    InnerProductValue,
    TruncatedSeries,
    geometric,
    hadamard,
    inner_product_truncated,
    u_n_numeric,
    v_n_numeric,
)
from .spectral import (
    EigenReport,
    GammaCounts,
    Reason,
    Verdict,
    classify_eigen,
    eigenvalue_candidate,
    gamma_counts,
    gamma_identity_check,
    make_eigenfunction,
    multisets_equal_via_newton,
    power_sums_equal,
    unit_shift,
)

__version__ = "0.1.0"
