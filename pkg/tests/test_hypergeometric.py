from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from heckehyp import (
    GQ,
    DivisibleJ,
    HypSeries,
    IllegalParameter,
    TruncatedSeries,
    canonicalize,
    coefficient,
    expand,
    pochhammer,
    pochhammer_split,
    pochhammer_split_offset,
)

from conftest import gaussian, hypseries


def brute_rising(a, k):
    out = GQ(1)
    for i in range(k):
        out = out * (GQ(a) + i)
    return out


@pytest.mark.parametrize("k", range(8))
def test_pochhammer_one_is_factorial(k):
    assert pochhammer(1, k) == factorial(k)


def test_pochhammer_examples():
    assert pochhammer(0, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(GQ(0, 1), 0) == 1


@given(gaussian(), st.integers(0, 15))
def test_pochhammer_step(a, k):
    if pochhammer(a, k):
        assert pochhammer(a, k + 1) / pochhammer(a, k) == a + k


@given(gaussian(), st.integers(0, 15))
def test_shift_relation(c, k):
    # k + c = c (c+1)_k / (c)_k wherever (c)_k is non-zero
    if pochhammer(c, k):
        assert k + c == c * pochhammer(c + 1, k) / pochhammer(c, k)


def test_pochhammer_split_examples():
    assert pochhammer_split(1, 2, 2) == brute_rising(1, 4) == 24
    assert pochhammer_split(GQ(0, 3), 4, 0) == 1
    third = Fraction(1, 3)
    assert pochhammer_split(third, 3, 1) == brute_rising(third, 3) == Fraction(28, 27)


@given(gaussian(), st.integers(1, 6), st.integers(0, 20))
def test_pochhammer_split_property(a, n, k):
    assert pochhammer_split(a, n, k) == pochhammer(a, k * n)


def test_pochhammer_split_offset_examples():
    split, value = pochhammer_split_offset(1, 2, 1, 1)
    assert (split.r, split.N, value) == (0, 3, brute_rising(1, 3))
    assert value == 6
    split, value = pochhammer_split_offset(1, 2, 1, 0)
    assert (split.N, value, split.constant) == (1, 1, 1)
    split, value = pochhammer_split_offset(2, 3, 2, 1)
    assert (split.r, split.N) == (0, 4)
    assert value == brute_rising(2, 4) == 120
    assert split.factors == (1, GQ(Fraction(4, 3)), GQ(Fraction(5, 3)))


def test_pochhammer_split_offset_rejects_divisible_j():
    with pytest.raises(DivisibleJ):
        pochhammer_split_offset(1, 3, 6, 2)


@given(gaussian(), st.integers(2, 6), st.integers(1, 17), st.integers(0, 12))
def test_pochhammer_split_offset_property(a, n, j, k):
    if j % n == 0:
        return
    split, value = pochhammer_split_offset(a, n, j, k)
    assert 0 <= split.r <= n - 2
    assert split.N == n * k + n - j % n
    assert value == pochhammer(a, split.N)


def test_illegal_lower_parameters():
    for bad in (0, -1, -7):
        with pytest.raises(IllegalParameter):
            HypSeries([1], [bad])
    HypSeries([0, -3], [Fraction(-1, 2), GQ(-1, 1)])  # zero and negative-integer uppers are fine
    with pytest.raises(IllegalParameter):
        HypSeries([1], [], scale=0)


def test_coefficient_examples(li2):
    assert coefficient(li2, 4) == Fraction(1, 16)
    assert coefficient(li2, 0) == 0
    zero = HypSeries([1, 2], [3], prefactor=0)
    assert all(coefficient(zero, m) == 0 for m in range(10))
    geo = HypSeries([1], [])
    assert all(coefficient(geo, m) == 1 for m in range(20))


def test_expand_examples(li2):
    assert expand(li2, 3) == TruncatedSeries([0, 1, Fraction(1, 4), Fraction(1, 9)])
    assert expand(HypSeries([1], [2], prefactor=0), 6) == TruncatedSeries([0] * 7)


def test_expand_terminating():
    # 2F1(-2, 1; 1; x) = (1 - x)^2
    assert expand(HypSeries([-2, 1], [1]), 5) == TruncatedSeries([1, -2, 1, 0, 0, 0])


@given(hypseries())
def test_expand_matches_direct_products(h):
    K = 15
    f = expand(h, K)
    assert f == TruncatedSeries(coefficient(h, m) for m in range(K + 1))


@given(hypseries(), gaussian().filter(bool))
def test_expand_scale(h, s):
    K = 12
    unit = expand(h.replace(scale=1), K)
    scaled = expand(h.replace(scale=s), K)
    for m in range(h.exponent, K + 1):
        assert scaled[m] == s ** (m - h.exponent) * unit[m]


def test_canonicalize_examples():
    c = canonicalize(HypSeries([2, 5], [5]))
    assert (c.upper, c.lower) == ((2,), ())
    c = canonicalize(HypSeries([1, 1], [1]))
    assert (c.upper, c.lower) == ((1,), ())


def test_canonicalize_sorts():
    c = canonicalize(HypSeries([3, GQ(1, 1), Fraction(-1, 2), GQ(1, -1)], [4, 2]))
    assert c.upper == (Fraction(-1, 2), GQ(1, -1), GQ(1, 1), 3)
    assert c.lower == (2, 4)


@given(hypseries(), st.lists(gaussian().filter(lambda z: not z.is_nonpositive_integer()), max_size=2))
def test_canonicalize_preserves_expansion(h, common):
    padded = h.replace(upper=h.upper + tuple(common), lower=tuple(reversed(common)) + h.lower)
    assert expand(canonicalize(padded), 30) == expand(padded, 30) == expand(h, 30)
    assert canonicalize(canonicalize(h)) == canonicalize(h)
