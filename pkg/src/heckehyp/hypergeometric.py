"""Symbolic hypergeometric series C * x^j * pFq(a; b; s*x) and Pochhammer arithmetic.

Storage convention: ``lower`` never contains the implicit 1 that turns k!
into the Pochhammer symbol (1)_k.  Code that needs the augmented lower vector
asks for :attr:`HypSeries.augmented_lower` and is responsible for dropping a
unit parameter again afterwards.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisibleJ, IllegalParameter
from .scalar import ONE, ZERO, GaussianRational, gq
from .series import TruncatedSeries

__all__ = [
    "HypSeries",
    "PochSplitOffset",
    "pochhammer",
    "pochhammer_split",
    "pochhammer_split_offset",
    "coefficient",
    "expand",
    "canonicalize",
    "cancel_multisets",
    "sort_params",
]


def _params(values: Iterable) -> tuple[GaussianRational, ...]:
    return tuple(gq(v) for v in values)


@dataclass(frozen=True)
class HypSeries:
    prefactor: GaussianRational
    exponent: int
    upper: tuple[GaussianRational, ...]
    lower: tuple[GaussianRational, ...]
    scale: GaussianRational

    def __init__(self, upper: Sequence = (), lower: Sequence = (), *, prefactor=1, exponent: int = 0, scale=1):
        object.__setattr__(self, "prefactor", gq(prefactor))
        object.__setattr__(self, "exponent", int(exponent))
        object.__setattr__(self, "upper", _params(upper))
        object.__setattr__(self, "lower", _params(lower))
        object.__setattr__(self, "scale", gq(scale))
        if self.exponent < 0:
            raise IllegalParameter(f"exponent must be non-negative, got {exponent}")
        if not self.scale:
            raise IllegalParameter("argument scale must be non-zero")
        for b in self.lower:
            if b.is_nonpositive_integer():
                raise IllegalParameter(f"lower parameter {b} is a non-positive integer")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def augmented_lower(self) -> tuple[GaussianRational, ...]:
        return self.lower + (ONE,)

    def is_balanced(self) -> bool:
        """p == q + 1 once k! is counted as a lower parameter."""
        return self.p == self.q + 1

    def replace(self, **changes) -> "HypSeries":
        fields = dict(
            upper=self.upper, lower=self.lower, prefactor=self.prefactor, exponent=self.exponent, scale=self.scale
        )
        fields.update(changes)
        return HypSeries(**fields)

    def __repr__(self):
        up = ", ".join(map(str, self.upper))
        lo = ", ".join(map(str, self.lower))
        return (
            f"HypSeries(({up}), ({lo}), prefactor={self.prefactor}, exponent={self.exponent}, scale={self.scale})"
        )


def pochhammer(a, k: int) -> GaussianRational:
    """Rising factorial a(a+1)...(a+k-1); 1 when k == 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    a = gq(a)
    out = ONE
    for i in range(k):
        out = out * (a + i)
    return out


def pochhammer_split(a, n: int, k: int) -> GaussianRational:
    """(a)_{kn} evaluated as n^{kn} * prod_{l<n} ((a+l)/n)_k."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    a = gq(a)
    out = gq(n) ** (k * n)
    for l in range(n):
        out = out * pochhammer((a + l) / n, k)
    return out


@dataclass(frozen=True)
class PochSplitOffset:
    """Decomposition (a)_N = n^{nk} * constant * prod_{i=r+1}^{r+n} ((a+i)/n)_k."""

    base: GaussianRational
    n: int
    r: int
    N: int
    constant: GaussianRational
    factors: tuple[GaussianRational, ...]


def pochhammer_split_offset(a, n: int, j: int, k: int) -> tuple[PochSplitOffset, GaussianRational]:
    """Split (a)_N where N = nk + n - (j mod n), for j not divisible by n.

    Returns the split data and its evaluated value.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if j % n == 0:
        raise DivisibleJ(f"{n} divides {j}")
    a = gq(a)
    r = n - (j % n) - 1
    N = n * k + r + 1
    factors = tuple((a + i) / n for i in range(r + 1, r + n + 1))
    split = PochSplitOffset(a, n, r, N, pochhammer(a, r + 1), factors)
    value = gq(n) ** (n * k) * split.constant
    for c in factors:
        value = value * pochhammer(c, k)
    return split, value


def coefficient(h: HypSeries, m: int) -> GaussianRational:
    """Coefficient of x^m, computed from fresh Pochhammer products."""
    k = m - h.exponent
    if k < 0 or not h.prefactor:
        return ZERO
    num = h.prefactor * h.scale**k
    for a in h.upper:
        num = num * pochhammer(a, k)
    den = pochhammer(1, k)
    for b in h.lower:
        den = den * pochhammer(b, k)
    return num / den


def expand(h: HypSeries, order: int) -> TruncatedSeries:
    """Coefficients 0..order, built from the term ratio rather than Pochhammer products."""
    if order < 0:
        raise ValueError("order must be non-negative")
    out = [ZERO] * (order + 1)
    if not h.prefactor:
        return TruncatedSeries(out)
    term = h.prefactor
    s = h.scale
    for k in range(order - h.exponent + 1):
        out[h.exponent + k] = term
        if not term:
            # terminating series: every later term is zero too
            break
        num = s
        for a in h.upper:
            num = num * (a + k)
        den = gq(k + 1)
        for b in h.lower:
            den = den * (b + k)
        term = term * num / den
    return TruncatedSeries(out)


def sort_params(params: Iterable[GaussianRational]) -> tuple[GaussianRational, ...]:
    return tuple(sorted(params, key=GaussianRational.sort_key))


def cancel_multisets(upper: Sequence[GaussianRational], lower: Sequence[GaussianRational]):
    """Remove common values one-for-one; returns sorted (upper, lower)."""
    common = Counter(upper) & Counter(lower)
    up = Counter(upper) - common
    lo = Counter(lower) - common
    return sort_params(up.elements()), sort_params(lo.elements())


def canonicalize(h: HypSeries) -> HypSeries:
    up, lo = cancel_multisets(h.upper, h.lower)
    return h.replace(upper=up, lower=lo)
