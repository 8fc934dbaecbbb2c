"""Eigenfunctions of U_n on hypergeometric series.

Only x^0 and x^1 prefactors can carry eigenfunctions.  At j = 0 the sole
one is C/(1-x); at j = 1 they are C * sum_k k^e x^k, with eigenvalue n^e for
every n at once.  ``classify_eigen`` decides which case applies structurally
and then confirms the verdict against the decimation oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadExponent, LengthMismatch, OracleMismatch, Unbalanced
from .hypergeometric import HypSeries, cancel_multisets, canonicalize, expand, pochhammer, sort_params
from .scalar import ONE, GaussianRational, gq
from .series import u_n_numeric

__all__ = [
    "Verdict",
    "Reason",
    "EigenReport",
    "GammaCounts",
    "gamma_counts",
    "eigenvalue_candidate",
    "gamma_identity_check",
    "classify_eigen",
    "make_eigenfunction",
    "power_sums_equal",
    "elementary_symmetric",
    "multisets_equal_via_newton",
    "unit_shift",
    "numeric_eigen_check",
]

TWO = gq(2)
CHECK_ORDER = 40
CHECK_NS = (2, 3)


class Verdict(str, enum.Enum):
    EIGEN = "Eigen"
    NOT_EIGEN = "NotEigen"


class Reason(str, enum.Enum):
    BAD_EXPONENT = "BadExponent"
    UNBALANCED = "Unbalanced"
    STRUCTURE_MISMATCH = "StructureMismatch"
    NUMERIC_MISMATCH = "NumericMismatch"


@dataclass(frozen=True)
class EigenReport:
    verdict: Verdict
    exponent: Optional[int] = None
    normalized_form: Optional[HypSeries] = None
    reason: Optional[Reason] = None

    @property
    def is_eigen(self) -> bool:
        return self.verdict is Verdict.EIGEN

    @classmethod
    def eigen(cls, e: int, form: HypSeries) -> "EigenReport":
        return cls(Verdict.EIGEN, exponent=e, normalized_form=form)

    @classmethod
    def not_eigen(cls, reason: Reason) -> "EigenReport":
        return cls(Verdict.NOT_EIGEN, reason=reason)


@dataclass(frozen=True)
class GammaCounts:
    gamma_a: int
    gamma_b: int


def _require_balanced(h: HypSeries) -> None:
    if not h.is_balanced():
        raise Unbalanced(f"need p = q + 1 counting k!, got p={h.p}, q={h.q}")


def _require_j1(h: HypSeries) -> None:
    _require_balanced(h)
    if h.exponent != 1:
        raise BadExponent(f"eigenvalue formulas need x^1, got x^{h.exponent}")


def gamma_counts(h: HypSeries) -> GammaCounts:
    _require_balanced(h)
    return GammaCounts(
        sum(1 for a in h.upper if a == ONE),
        sum(1 for b in h.augmented_lower if b == ONE),
    )


def _pochhammer_product(params, k: int) -> GaussianRational:
    out = ONE
    for c in params:
        out = out * pochhammer(c, k)
    return out


def eigenvalue_candidate(h: HypSeries, n: int) -> GaussianRational:
    """Ratio of the x^n and x^1 coefficients: the only possible U_n eigenvalue."""
    _require_j1(h)
    num = _pochhammer_product(h.upper, n - 1) * h.scale ** (n - 1)
    return num / _pochhammer_product(h.augmented_lower, n - 1)


def gamma_identity_check(h: HypSeries, n: int) -> bool:
    _require_j1(h)
    g = gamma_counts(h)
    lhs = gq(n) ** g.gamma_a * _pochhammer_product(h.upper, n - 1)
    rhs = gq(n) ** g.gamma_b * _pochhammer_product(h.augmented_lower, n - 1)
    return lhs == rhs


def numeric_eigen_check(h: HypSeries, e: int, ns: Sequence[int] = CHECK_NS, order: int = CHECK_ORDER) -> bool:
    """True iff U_n h == n^e h on coefficients 0..order for every n in ``ns``."""
    base = expand(h, order)
    for n in ns:
        decimated = u_n_numeric(expand(h, n * order + n), n).truncate(order)
        if decimated != base.scaled(gq(n) ** e):
            return False
    return True


def _reduced(h: HypSeries):
    """Upper and augmented lower parameters with common values cancelled."""
    return cancel_multisets(h.upper, h.augmented_lower)


def classify_eigen(h: HypSeries) -> EigenReport:
    j = h.exponent
    if j not in (0, 1):
        return EigenReport.not_eigen(Reason.BAD_EXPONENT)
    if not h.prefactor or h.scale != ONE:
        return EigenReport.not_eigen(Reason.STRUCTURE_MISMATCH)

    form = canonicalize(h)
    if not form.is_balanced():
        return EigenReport.not_eigen(Reason.UNBALANCED)
    up, lo = _reduced(form)

    if j == 0:
        if up or lo:
            return EigenReport.not_eigen(Reason.STRUCTURE_MISMATCH)
        e = 0
    else:
        if all(a == ONE for a in up) and all(b == TWO for b in lo):
            e = -len(up)
        elif all(a == TWO for a in up) and all(b == ONE for b in lo):
            e = len(up)
        else:
            return EigenReport.not_eigen(Reason.STRUCTURE_MISMATCH)
        g = gamma_counts(form)
        if g.gamma_b - g.gamma_a != e:
            raise OracleMismatch(f"gamma counts {g} disagree with structural exponent {e}")

    if not numeric_eigen_check(form, e):
        return EigenReport.not_eigen(Reason.NUMERIC_MISMATCH)
    return EigenReport.eigen(e, form)


def make_eigenfunction(e: int) -> HypSeries:
    """sum_{k>=1} k^e x^k as x * pFq; unit prefactor and scale."""
    if e < 0:
        return HypSeries([1] * (1 - e), [2] * (-e), exponent=1)
    if e == 0:
        return HypSeries([1], [], exponent=1)
    return HypSeries([2] * e, [1] * (e - 1), exponent=1)


# -- power sums and multisets -------------------------------------------------


def _check_lengths(u, v) -> None:
    if len(u) != len(v):
        raise LengthMismatch(f"vectors of length {len(u)} and {len(v)}")


def _power_sums(u: Sequence[GaussianRational], k_max: int) -> list[GaussianRational]:
    sums = [gq(0)] * (k_max + 1)
    for x in u:
        w = ONE
        for k in range(1, k_max + 1):
            w = w * x
            sums[k] = sums[k] + w
    sums[0] = gq(len(u))
    return sums


def power_sums_equal(u: Sequence, v: Sequence, k_max: int) -> bool:
    u, v = [gq(x) for x in u], [gq(x) for x in v]
    _check_lengths(u, v)
    return _power_sums(u, k_max)[1:] == _power_sums(v, k_max)[1:]


def elementary_symmetric(u: Sequence) -> list[GaussianRational]:
    """e_0..e_p of ``u`` recovered from its power sums by Newton's identities."""
    u = [gq(x) for x in u]
    p = len(u)
    ps = _power_sums(u, p)
    e = [ONE]
    for k in range(1, p + 1):
        acc = gq(0)
        for i in range(1, k + 1):
            term = e[k - i] * ps[i]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / k)
    return e


def multisets_equal_via_newton(u: Sequence, v: Sequence) -> bool:
    _check_lengths(u, v)
    return elementary_symmetric(u) == elementary_symmetric(v)


def unit_shift(params: Sequence) -> tuple[GaussianRational, ...]:
    return tuple(TWO if gq(c) == ONE else gq(c) for c in params)


def sorted_multiset(u: Sequence) -> tuple[GaussianRational, ...]:
    return sort_params(gq(x) for x in u)
