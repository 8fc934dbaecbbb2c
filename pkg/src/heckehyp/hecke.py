"""Symbolic U_n on HypSeries.

The contract every output must honour is the decimation identity::

    expand(apply_un(h, n), K) == u_n_numeric(expand(h, n*K + n), n).truncate(K)

The parameter images below are how that series is written back in pFq form.
"""

from __future__ import annotations

from .errors import NotDivisibleJ
from .hypergeometric import HypSeries, canonicalize, pochhammer
from .scalar import ONE, GaussianRational, gq

__all__ = ["apply_un", "parameter_sum_shift"]


def _drop_unit(block: list[GaussianRational]) -> list[GaussianRational]:
    # Exactly one entry of the augmented block is 1; it becomes the new k!.
    i = block.index(ONE)
    return block[:i] + block[i + 1 :]


def apply_un(h: HypSeries, n: int, *, canonical: bool = False) -> HypSeries:
    """Apply the Hecke operator U_n to ``h`` symbolically.

    For n | j the new exponent is j/n and each parameter c spawns
    (c + l)/n for l = 0..n-1.  Otherwise, with r = n - (j mod n) - 1, the new
    exponent is 1 + floor(j/n), the parameters are (c + r + 1 + l)/n, and the
    prefactor absorbs s^(r+1) * prod (a)_{r+1} / prod (b)_{r+1} over the
    augmented lower vector.  In both cases the scale becomes
    s^n * n^(n(p - q - 1)).

    With ``canonical=True`` the result is passed through ``canonicalize``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return canonicalize(h) if canonical else h

    j = h.exponent
    p, q = h.p, h.q
    if j % n == 0:
        shift = 0
        exponent = j // n
        prefactor = h.prefactor
    else:
        r = n - (j % n) - 1
        shift = r + 1
        exponent = 1 + j // n
        prefactor = h.prefactor * h.scale**shift
        for a in h.upper:
            prefactor = prefactor * pochhammer(a, shift)
        for b in h.augmented_lower:
            prefactor = prefactor / pochhammer(b, shift)

    upper = [(a + shift + l) / n for a in h.upper for l in range(n)]
    lower = [(b + shift + l) / n for b in h.lower for l in range(n)]
    lower += _drop_unit([(ONE + shift + l) / n for l in range(n)])
    scale = h.scale**n * gq(n) ** (n * (p - q - 1))

    out = HypSeries(upper, lower, prefactor=prefactor, exponent=exponent, scale=scale)
    return canonicalize(out) if canonical else out


def parameter_sum_shift(h: HypSeries, n: int) -> GaussianRational:
    """(sum c - sum d) - (sum a - sum b) for the n | j image of ``h``.

    Always equals (n - 1)(p - q - 1)/2; zero for balanced ``h``.
    """
    if h.exponent % n:
        raise NotDivisibleJ(f"parameter sums are tracked for n | j only; n={n}, j={h.exponent}")
    image = apply_un(h, n)
    before = sum(h.upper, gq(0)) - sum(h.lower, gq(0))
    after = sum(image.upper, gq(0)) - sum(image.lower, gq(0))
    return after - before
