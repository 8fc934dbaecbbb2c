from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from heckehyp import GaussianRational, HypSeries, TruncatedSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


@st.composite
def gaussian(draw, real_only=False):
    re = draw(small_rationals)
    im = Fraction(0) if real_only else draw(st.one_of(st.just(Fraction(0)), small_rationals))
    return GaussianRational(re, im)


def series(order, real_only=False):
    return st.lists(gaussian(real_only), min_size=order + 1, max_size=order + 1).map(TruncatedSeries)


lower_params = gaussian().filter(lambda z: not z.is_nonpositive_integer())


@st.composite
def hypseries(draw, max_p=3, max_q=3, max_j=7, unit_scale=False):
    upper = draw(st.lists(gaussian(), max_size=max_p))
    lower = draw(st.lists(lower_params, max_size=max_q))
    prefactor = draw(gaussian().filter(bool))
    scale = GaussianRational(1) if unit_scale else draw(gaussian().filter(bool))
    return HypSeries(upper, lower, prefactor=prefactor, exponent=draw(st.integers(0, max_j)), scale=scale)


@pytest.fixture
def li2():
    return HypSeries([1, 1, 1], [2, 2], exponent=1)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
