"""Truncated formal power series and the coefficient-level operators U_n and V_n.

``u_n_numeric`` is the decimation oracle the rest of the package is checked
against, so it stays deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InsufficientOrder
from .scalar import ONE, ZERO, GaussianRational, gq

__all__ = [
    "TruncatedSeries",
    "InnerProductValue",
    "u_n_numeric",
    "v_n_numeric",
    "hadamard",
    "inner_product_truncated",
    "geometric",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_K of a power series, K being the last retained index.

    ``==`` compares the full coefficient vectors, so series of different order
    are never equal; use :meth:`agrees_with` for comparison on the overlap.
    """

    coeffs: tuple[GaussianRational, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(gq(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InsufficientOrder(f"cannot truncate order {self.order} series to order {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        k = min(self.order, other.order)
        return self.coeffs[: k + 1] == other.coeffs[: k + 1]

    def scaled(self, c) -> "TruncatedSeries":
        c = gq(c)
        return TruncatedSeries(c * x for x in self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"


@dataclass(frozen=True)
class InnerProductValue:
    """Truncated <f, g>_R, stored as the multiplier of 2*pi*i."""

    value: GaussianRational
    radius: Fraction
    terms_used: int


def geometric(order: int) -> TruncatedSeries:
    """1/(1-x) to the given order."""
    return TruncatedSeries([ONE] * (order + 1))


def u_n_numeric(f: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 1:
        raise ValueError("n must be a positive integer")
    return TruncatedSeries(f.coeffs[::n])


def v_n_numeric(f: TruncatedSeries, n: int, order_out: int) -> TruncatedSeries:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if order_out < 0:
        raise ValueError("output order must be non-negative")
    if order_out > n * f.order:
        raise InsufficientOrder(
            f"V_{n} of an order-{f.order} series is only known up to index {n * f.order}, asked for {order_out}"
        )
    out = [ZERO] * (order_out + 1)
    for k in range(order_out // n + 1):
        out[n * k] = f.coeffs[k]
    return TruncatedSeries(out)


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(c * d for c, d in zip(f.coeffs, g.coeffs))


def inner_product_truncated(f: TruncatedSeries, g: TruncatedSeries, radius) -> InnerProductValue:
    """sum_k c_k conj(d_k) R^(2k) over the common order of f and g."""
    R = Fraction(radius)
    if R <= 0:
        raise ValueError("radius must be positive")
    r2 = gq(R * R)
    total = ZERO
    w = ONE
    terms = min(f.order, g.order)
    for c, d in zip(f.coeffs, g.coeffs):
        total = total + c * d.conj() * w
        w = w * r2
    return InnerProductValue(total, R, terms)

