"""Seeded property suites behind ``heckehyp verify``.

Each suite returns a :class:`SuiteResult`; a failing suite stops at its first
counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Optional

from . import sampling
from .hecke import apply_un
from .hypergeometric import expand, pochhammer, pochhammer_split, pochhammer_split_offset
from .multiplicative import classify_cm, hyp_coeff_sequence, test_complete_multiplicativity
from .scalar import gq
from .series import inner_product_truncated, u_n_numeric, v_n_numeric
from .spectral import (
    classify_eigen,
    eigenvalue_candidate,
    gamma_identity_check,
    make_eigenfunction,
    multisets_equal_via_newton,
    power_sums_equal,
    sorted_multiset,
)

__all__ = ["SuiteResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    seed: int
    cases: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


# A suite yields (description, ok) pairs.
Suite = Callable[[random.Random], Iterator[tuple[str, bool]]]


def _operator_algebra(rng: random.Random):
    for _ in range(200):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        K = n * m * 20
        f = sampling.series(rng, K)
        yield f"U_{n} U_{m} = U_{n * m}", u_n_numeric(u_n_numeric(f, m), n) == u_n_numeric(f, n * m)
        yield f"V_{n} V_{m} = V_{n * m}", (
            v_n_numeric(v_n_numeric(f, m, m * K), n, n * m * K) == v_n_numeric(f, n * m, n * m * K)
        )
        yield f"U_{n} V_{n} = Id", u_n_numeric(v_n_numeric(f, n, n * K), n) == f
        g = gcd(m, n)
        lhs = u_n_numeric(v_n_numeric(f, m, m * K), n)
        inner = u_n_numeric(f, n // g)
        rhs = v_n_numeric(inner, m // g, (m // g) * inner.order)
        k = min(lhs.order, rhs.order)
        yield f"U_{n} V_{m} = V_{m // g} U_{n // g}", lhs.truncate(k) == rhs.truncate(k)
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        vf = v_n_numeric(f, m, m * K)
        yield f"U_{a * b} V_{m} = U_{a} (U_{b} V_{m})", u_n_numeric(vf, a * b) == u_n_numeric(u_n_numeric(vf, b), a)


def _adjoint(rng: random.Random):
    R = Fraction(1, 3)
    K = 50
    for _ in range(100):
        for n in (2, 3):
            f = sampling.series(rng, n * K)
            g = sampling.series(rng, K)
            lhs = inner_product_truncated(f, v_n_numeric(g, n, n * K), R).value
            rhs = inner_product_truncated(u_n_numeric(f, n), g, R**n).value
            yield f"<f, V_{n} g>_R = <U_{n} f, g>_(R^{n})", lhs == rhs


def _pochhammer(rng: random.Random):
    for _ in range(500):
        a = sampling.scalar(rng)
        n, k = rng.randint(1, 6), rng.randint(0, 20)
        yield f"split({a}, {n}, {k})", pochhammer_split(a, n, k) == pochhammer(a, k * n)
    done = 0
    while done < 500:
        a = sampling.scalar(rng)
        n, j, k = rng.randint(2, 6), rng.randint(1, 17), rng.randint(0, 12)
        if j % n == 0:
            continue
        split, value = pochhammer_split_offset(a, n, j, k)
        done += 1
        yield f"split_offset({a}, {n}, {j}, {k})", 0 <= split.r <= n - 2 and value == pochhammer(a, split.N)


def _oracle(rng: random.Random):
    K = 40
    for i in range(200):
        h = sampling.hypseries(rng)
        n = rng.randint(2, 5)
        # alternate between the two divisibility regimes
        if i % 2 == 0:
            h = h.replace(exponent=n * rng.randint(0, 7 // n))
        elif h.exponent % n == 0:
            h = h.replace(exponent=h.exponent + 1)
        image = apply_un(h, n)
        ok = expand(image, K) == u_n_numeric(expand(h, n * K + n), n).truncate(K)
        ok = ok and not any(b.is_nonpositive_integer() for b in image.lower)
        yield f"apply_un({h!r}, {n})", ok


def _spectrum(rng: random.Random):
    for e in range(-4, 5):
        h = make_eigenfunction(e)
        report = classify_eigen(h)
        yield f"classify(make_eigenfunction({e}))", report.is_eigen and report.exponent == e
        for n in (2, 3, 5):
            yield f"eigenvalue_candidate(e={e}, n={n})", eigenvalue_candidate(h, n) == gq(n) ** e
        for n in range(2, 11):
            yield f"gamma identity (e={e}, n={n})", gamma_identity_check(h, n)


def _newton(rng: random.Random):
    for _ in range(300):
        p = rng.randint(0, 6)
        u = [sampling.scalar(rng, 3) for _ in range(p)]
        if rng.random() < 0.5:
            v = u[:]
            rng.shuffle(v)
            if v and rng.random() < 0.5:
                v[rng.randrange(p)] = sampling.scalar(rng, 3)
        else:
            v = [sampling.scalar(rng, 3) for _ in range(p)]
        expected = sorted_multiset(u) == sorted_multiset(v)
        ok = power_sums_equal(u, v, max(p, 1)) == expected and multisets_equal_via_newton(u, v) == expected
        yield f"newton({u}, {v})", ok


def _multiplicative(rng: random.Random):
    for e in range(-4, 5):
        h = make_eigenfunction(e)
        upper, lower = h.upper, h.augmented_lower
        seq = hyp_coeff_sequence(upper, lower, 200)
        yield f"c(n) = n^{e}", seq == [gq(n) ** e for n in range(1, 201)]
        yield f"pairwise CM e={e}", test_complete_multiplicativity(seq).is_cm
        report = classify_cm(upper, lower, 60)
        yield f"classify_cm e={e}", report.is_cm and report.exponent == e
    for _ in range(50):
        upper, lower = sampling.perturbed_cm_instance(rng)
        report = classify_cm(upper, lower, 60)
        ok = not report.is_cm and report.witness[0] * report.witness[1] <= 30
        yield f"perturbed {upper}/{lower}", ok


SUITES: dict[str, Suite] = {
    "operator-algebra": _operator_algebra,
    "adjoint": _adjoint,
    "pochhammer": _pochhammer,
    "oracle": _oracle,
    "spectrum": _spectrum,
    "newton": _newton,
    "multiplicative": _multiplicative,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    rng = random.Random(f"{name}:{seed}")
    cases = 0
    for description, ok in suite(rng):
        cases += 1
        if not ok:
            return SuiteResult(name, seed, cases, description)
    return SuiteResult(name, seed, cases)
