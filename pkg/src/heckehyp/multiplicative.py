"""Complete multiplicativity of hypergeometric coefficient sequences.

Here a sequence is c(n) = prod (a_i)_{n-1} / prod (b_i)_{n-1} for n >= 1,
where ``lower`` lists every denominator parameter explicitly (k! is not
implied).  Two routes decide whether c is completely multiplicative: a brute
force pair test, and the eigenfunction classifier applied to sum c(n) x^n.
``classify_cm`` runs both and refuses to answer if they disagree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import IllegalParameter, OracleMismatch
from .hypergeometric import HypSeries
from .scalar import ONE, ZERO, GaussianRational, gq
from .spectral import classify_eigen

__all__ = [
    "CMVerdict",
    "CMReport",
    "hyp_coeff_sequence",
    "test_complete_multiplicativity",
    "classify_cm",
    "sequence_series",
]


class CMVerdict(str, enum.Enum):
    CM = "CompletelyMultiplicative"
    NOT_CM = "NotCM"


@dataclass(frozen=True)
class CMReport:
    verdict: CMVerdict
    exponent: Optional[int] = None
    constant: Optional[GaussianRational] = None
    witness: Optional[tuple[int, int]] = None

    @property
    def is_cm(self) -> bool:
        return self.verdict is CMVerdict.CM


# pytest would otherwise try to collect the function below as a test
def _no_collect(fn):
    fn.__test__ = False
    return fn


def _check_params(upper, lower):
    upper = tuple(gq(a) for a in upper)
    lower = tuple(gq(b) for b in lower)
    for b in lower:
        if b.is_nonpositive_integer():
            raise IllegalParameter(f"lower parameter {b} is a non-positive integer")
    return upper, lower


def hyp_coeff_sequence(upper: Sequence, lower: Sequence, N: int) -> list[GaussianRational]:
    """[c(1), ..., c(N)]."""
    upper, lower = _check_params(upper, lower)
    out = []
    c = ONE
    for k in range(N):
        out.append(c)
        num = ONE
        for a in upper:
            num = num * (a + k)
        den = ONE
        for b in lower:
            den = den * (b + k)
        c = c * num / den
    return out


@_no_collect
def test_complete_multiplicativity(c: Sequence) -> CMReport:
    """Pairwise check of c(mk) == c(m)c(k) on a 1-indexed sequence given as a list.

    ``c[0]`` holds c(1).  The sequence is normalized by c(1) first; the first
    failing pair (m, k) with 2 <= m <= k, in lexicographic order, is the witness.
    """
    c = [gq(x) for x in c]
    N = len(c)
    if N == 0 or c[0] == ZERO:
        return CMReport(CMVerdict.NOT_CM, witness=(1, 1))
    c1 = c[0]
    cn = [x / c1 for x in c] if c1 != ONE else c
    for m in range(2, N + 1):
        if m * m > N:
            break
        for k in range(m, N // m + 1):
            if cn[m * k - 1] != cn[m - 1] * cn[k - 1]:
                return CMReport(CMVerdict.NOT_CM, witness=(m, k))
    return CMReport(CMVerdict.CM)


def sequence_series(upper: Sequence, lower: Sequence) -> HypSeries:
    """sum_{n>=1} c(n) x^n as x * pFq in the package's storage convention.

    An extra upper 1 pairs with the implicit k! so that ``lower`` is used
    verbatim.
    """
    upper, lower = _check_params(upper, lower)
    return HypSeries(upper + (ONE,), lower, exponent=1)


def classify_cm(upper: Sequence, lower: Sequence, N: int) -> CMReport:
    upper, lower = _check_params(upper, lower)
    if any(a == ZERO for a in upper):
        # c = (1, 0, 0, ...) is multiplicative but has eigenvalue 0, which is not of the form n^a
        raise IllegalParameter("upper parameter 0 collapses the sequence to c(n) = 0 for n >= 2")
    h = sequence_series(upper, lower)
    report = classify_eigen(h)
    pairwise = test_complete_multiplicativity(hyp_coeff_sequence(upper, lower, N))
    if report.is_eigen != pairwise.is_cm:
        raise OracleMismatch(
            f"eigen route says {report.verdict.value}, pairwise route says {pairwise.verdict.value} "
            f"for upper={upper}, lower={lower}"
        )
    if report.is_eigen:
        return CMReport(CMVerdict.CM, exponent=report.exponent, constant=report.normalized_form.prefactor)
    return pairwise
