"""Seeded generators for random scalars, series and hypergeometric inputs."""

from __future__ import annotations

import random
from fractions import Fraction

from .hypergeometric import HypSeries, cancel_multisets
from .scalar import GaussianRational
from .series import TruncatedSeries


def rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def scalar(rng: random.Random, bound: int = 9, complex_rate: float = 0.3) -> GaussianRational:
    im = rational(rng, bound) if rng.random() < complex_rate else 0
    return GaussianRational(rational(rng, bound), im)


def nonzero_scalar(rng: random.Random, bound: int = 9, complex_rate: float = 0.3) -> GaussianRational:
    while True:
        z = scalar(rng, bound, complex_rate)
        if z:
            return z


def lower_param(rng: random.Random, bound: int = 9, complex_rate: float = 0.3) -> GaussianRational:
    while True:
        z = scalar(rng, bound, complex_rate)
        if not z.is_nonpositive_integer():
            return z


def series(rng: random.Random, order: int, bound: int = 9, complex_rate: float = 0.3) -> TruncatedSeries:
    return TruncatedSeries(scalar(rng, bound, complex_rate) for _ in range(order + 1))


def real_series(rng: random.Random, order: int, bound: int = 9) -> TruncatedSeries:
    return series(rng, order, bound, complex_rate=0.0)


def hypseries(
    rng: random.Random,
    *,
    max_p: int = 3,
    max_q: int = 3,
    exponent: int | None = None,
    max_exponent: int = 7,
    unit_scale: bool = False,
    bound: int = 9,
) -> HypSeries:
    p = rng.randint(0, max_p)
    q = rng.randint(0, max_q)
    j = rng.randint(0, max_exponent) if exponent is None else exponent
    return HypSeries(
        [scalar(rng, bound) for _ in range(p)],
        [lower_param(rng, bound) for _ in range(q)],
        prefactor=nonzero_scalar(rng, bound),
        exponent=j,
        scale=1 if unit_scale else nonzero_scalar(rng, bound),
    )


def balanced_hypseries(rng: random.Random, *, exponent: int, max_q: int = 3, bound: int = 9) -> HypSeries:
    q = rng.randint(0, max_q)
    return HypSeries(
        [scalar(rng, bound) for _ in range(q + 1)],
        [lower_param(rng, bound) for _ in range(q)],
        prefactor=nonzero_scalar(rng, bound),
        exponent=exponent,
    )


def _cm_shape(upper, lower) -> bool:
    """True if the parameters cancel down to (1,..,1)/(2,..,2), (2,..,2)/(1,..,1) or nothing."""
    up, lo = cancel_multisets(upper, lower)
    if len(up) != len(lo):
        return False
    return (all(a == 1 for a in up) and all(b == 2 for b in lo)) or (
        all(a == 2 for a in up) and all(b == 1 for b in lo)
    )


def perturbations(upper, lower):
    """Every copy of (upper, lower) with one parameter raised by 1, minus those landing back in a CM shape."""
    upper, lower = tuple(upper), tuple(lower)
    for i in range(len(upper)):
        up = upper[:i] + (upper[i] + 1,) + upper[i + 1 :]
        if not _cm_shape(up, lower):
            yield up, lower
    for i in range(len(lower)):
        lo = lower[:i] + (lower[i] + 1,) + lower[i + 1 :]
        if not _cm_shape(upper, lo):
            yield upper, lo


def cm_instance(rng: random.Random, e: int, bound: int = 9):
    """Parameters (upper, lower) of c(n) = n^e, padded with one random cancelling pair."""
    if e < 0:
        upper, lower = [1] * -e, [2] * -e
    else:
        upper, lower = [2] * e, [1] * e
    c = lower_param(rng, bound)
    upper.insert(rng.randint(0, len(upper)), c)
    lower.insert(rng.randint(0, len(lower)), c)
    return tuple(GaussianRational(a) for a in upper), tuple(GaussianRational(b) for b in lower)


def perturbed_cm_instance(rng: random.Random, bound: int = 9):
    """A seeded CM parameter set with exactly one parameter raised by 1, never itself of CM shape."""
    while True:
        upper, lower = cm_instance(rng, rng.randint(-4, 4), bound)
        options = list(perturbations(upper, lower))
        options = [(u, l) for u, l in options if not any(b.is_nonpositive_integer() for b in l)]
        if options:
            return rng.choice(options)
