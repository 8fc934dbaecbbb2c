from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckehyp import GQ, HypSeries, NotDivisibleJ, apply_un, canonicalize, expand, parameter_sum_shift, u_n_numeric

from conftest import gaussian, hypseries, lower_params

F = Fraction


def decimation(h, n, K):
    return u_n_numeric(expand(h, n * K + n), n).truncate(K)


def test_dilogarithm_image(li2):
    raw = apply_un(li2, 2)
    assert raw.upper == (1, F(3, 2), 1, F(3, 2), 1, F(3, 2))
    assert raw.lower == (F(3, 2), 2, F(3, 2), 2, F(3, 2))
    assert (raw.prefactor, raw.exponent, raw.scale) == (F(1, 4), 1, 1)
    assert expand(raw, 40) == decimation(li2, 2, 40)
    assert canonicalize(raw) == HypSeries([1, 1, 1], [2, 2], prefactor=F(1, 4), exponent=1)
    assert apply_un(li2, 2, canonical=True) == canonicalize(raw)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_geometric_series_is_fixed(n):
    geo = HypSeries([1], [])
    assert apply_un(geo, n, canonical=True) == geo


def test_n_divides_j_image():
    a1, a2, b1 = F(1, 3), GQ(2), F(5, 2)
    h = HypSeries([a1, a2], [b1], exponent=2)
    out = apply_un(h, 2)
    assert out.exponent == 1
    assert out.upper == (a1 / 2, (a1 + 1) / 2, a2 / 2, (a2 + 1) / 2)
    assert out.lower == (b1 / 2, (b1 + 1) / 2, F(1, 2))
    assert out.scale == 1 and out.prefactor == 1
    assert expand(out, 40) == decimation(h, 2, 40)


def test_unbalanced_scale():
    # p - q - 1 = -1 for 1F1, so the argument picks up n^(-n)
    h = HypSeries([F(1, 3)], [F(5, 2)], exponent=4)
    assert apply_un(h, 2).scale == F(1, 4)
    h = HypSeries([1, 2, 3], [], exponent=0, scale=GQ(0, 1))
    assert apply_un(h, 2).scale == GQ(0, 1) ** 2 * 2**4


def test_n_equals_one_is_identity():
    h = HypSeries([F(1, 2), 3], [F(7, 3)], prefactor=GQ(1, 1), exponent=3, scale=F(-2, 5))
    assert apply_un(h, 1) == h


@settings(max_examples=120)
@given(hypseries(), st.integers(1, 5))
def test_oracle_equivalence(h, n):
    out = apply_un(h, n)
    assert expand(out, 40) == decimation(h, n, 40)
    assert not any(b.is_nonpositive_integer() for b in out.lower)
    assert out.p == n * h.p
    assert out.q == (n * (h.q + 1) - 1 if n > 1 else h.q)


@settings(max_examples=30)
@given(hypseries(max_p=2, max_q=2, max_j=5), st.integers(2, 3), st.integers(2, 3))
def test_composition_transport(h, n, m):
    K = 20
    assert expand(apply_un(apply_un(h, n), m), K) == expand(apply_un(h, n * m), K)


@given(st.data(), st.integers(0, 3), st.integers(2, 5), st.integers(0, 7))
def test_balanced_closure(data, q, n, j):
    upper = data.draw(st.lists(gaussian(), min_size=q + 1, max_size=q + 1))
    lower = data.draw(st.lists(lower_params, min_size=q, max_size=q))
    h = HypSeries(upper, lower, exponent=j)
    out = apply_un(h, n)
    assert out.is_balanced()
    assert out.scale == 1
    assert expand(out, 20) == decimation(h, n, 20)


def test_parameter_sum_shift_examples():
    # x^2 1F1(1/3; 5/2; x): p - q - 1 = -1
    assert parameter_sum_shift(HypSeries([F(1, 3)], [F(5, 2)], exponent=2), 2) == F(-1, 2)
    assert parameter_sum_shift(HypSeries([F(1, 3), 2], [F(5, 2)], exponent=2), 2) == 0
    assert parameter_sum_shift(HypSeries([F(1, 3)], [F(5, 2), 7], exponent=3), 1) == 0
    with pytest.raises(NotDivisibleJ):
        parameter_sum_shift(HypSeries([1], [], exponent=1), 2)


@given(hypseries(), st.integers(1, 5))
def test_parameter_sum_shift_formula(h, n):
    h = h.replace(exponent=n * (h.exponent % 3))
    assert parameter_sum_shift(h, n) == F((n - 1) * (h.p - h.q - 1), 2)
