"""Exact Gaussian rationals: complex numbers a + b*i with a, b in Q.

Values are stored as a triple ``(x, y, d)`` meaning ``(x + y*i) / d`` with
``d > 0`` and ``gcd(x, y, d) == 1``.  A single shared denominator keeps
multiplication down to one gcd per operation, which matters because the
series code multiplies thousands of these with very large integers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

from .errors import DivisionByZero, ParseError

__all__ = ["GaussianRational", "GQ", "gq", "scalar_arith", "parse_scalar", "format_scalar", "ZERO", "ONE", "I"]


class GaussianRational:
    __slots__ = ("_x", "_y", "_d")

    def __init__(self, re: Union[int, Fraction, str, "GaussianRational"] = 0, im: Union[int, Fraction] = 0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a GaussianRational real part with an imaginary part")
            self._x, self._y, self._d = re._x, re._y, re._d
            return
        if isinstance(re, str):
            if im:
                raise TypeError("string input carries its own imaginary part")
            v = parse_scalar(re)
            self._x, self._y, self._d = v._x, v._y, v._d
            return
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass a Fraction or a string")
        fr = Fraction(re)
        fi = Fraction(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        self._set(fr.numerator * (d // fr.denominator), fi.numerator * (d // fi.denominator), d)

    def _set(self, x: int, y: int, d: int) -> None:
        g = gcd(x, y, d)
        if g != 1:
            x //= g
            y //= g
            d //= g
        self._x, self._y, self._d = x, y, d

    @classmethod
    def _raw(cls, x: int, y: int, d: int) -> "GaussianRational":
        # d must already be positive
        obj = cls.__new__(cls)
        obj._set(x, y, d)
        return obj

    # -- components -------------------------------------------------------

    @property
    def real(self) -> Fraction:
        return Fraction(self._x, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._y, self._d)

    @property
    def re_num(self) -> int:
        return self.real.numerator

    @property
    def re_den(self) -> int:
        return self.real.denominator

    @property
    def im_num(self) -> int:
        return self.imag.numerator

    @property
    def im_den(self) -> int:
        return self.imag.denominator

    def is_real(self) -> bool:
        return self._y == 0

    def is_integer(self) -> bool:
        return self._y == 0 and self._d == 1

    def is_nonpositive_integer(self) -> bool:
        return self._y == 0 and self._d == 1 and self._x <= 0

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic (re, im) key; a deterministic order with no mathematical meaning."""
        return (self.real, self.imag)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return GaussianRational._raw(self._x + o._x, self._y + o._y, self._d)
        return GaussianRational._raw(
            self._x * o._d + o._x * self._d, self._y * o._d + o._y * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        obj = GaussianRational.__new__(GaussianRational)
        obj._x, obj._y, obj._d = -self._x, -self._y, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._y == 0 and o._y == 0:
            return GaussianRational._raw(self._x * o._x, 0, self._d * o._d)
        return GaussianRational._raw(
            self._x * o._x - self._y * o._y,
            self._x * o._y + self._y * o._x,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        obj = GaussianRational.__new__(GaussianRational)
        obj._x, obj._y, obj._d = self._x, -self._y, self._d
        return obj

    def norm(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return Fraction(self._x * self._x + self._y * self._y, self._d * self._d)

    def inverse(self) -> "GaussianRational":
        # 1/((x+iy)/d) = d(x-iy)/(x^2+y^2)
        n = self._x * self._x + self._y * self._y
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        x, y = self._d * self._x, -self._d * self._y
        return GaussianRational._raw(x, y, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self._x == o._x and self._y == o._y and self._d == o._d

    def __hash__(self):
        if self._y == 0:
            return hash(Fraction(self._x, self._d))
        return hash((self._x, self._y, self._d))

    def __bool__(self):
        return self._x != 0 or self._y != 0

    def __repr__(self):
        return f"GQ({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


GQ = GaussianRational

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _coerce(v):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, bool):
        return NotImplemented
    if isinstance(v, int):
        obj = GaussianRational.__new__(GaussianRational)
        obj._x, obj._y, obj._d = v, 0, 1
        return obj
    if isinstance(v, Rational):
        return GaussianRational(Fraction(v))
    if isinstance(v, complex):
        return NotImplemented
    return NotImplemented


def gq(v) -> GaussianRational:
    """Coerce ints, Fractions and scalar strings into a GaussianRational."""
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, str):
        return parse_scalar(v)
    out = _coerce(v)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {v!r} as a Gaussian rational")
    return out


def scalar_arith(op: str, x, y=None) -> GaussianRational:
    x = gq(x)
    if op == "neg":
        return -x
    if op == "conj":
        return x.conj()
    if y is None:
        raise TypeError(f"operation {op!r} needs two operands")
    y = gq(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


# -- text format ----------------------------------------------------------

_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")
_IMAG = re.compile(r"(?P<sign>[+-]?)(?:(?P<mag>\d+(?:/\d+)?)\*)?i")


def _rat(text: str) -> Fraction:
    if _RAT.fullmatch(text) is None:
        raise ParseError(f"malformed rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"3"``, ``"-2/5"``, ``"1/2+3/4*i"``, ``"-i"``, ``"2*i"``; whitespace is ignored."""
    if not isinstance(text, str):
        raise ParseError(f"expected scalar text, got {type(text).__name__}")
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar")
    if not s.endswith("i"):
        return GaussianRational(_rat(s))
    cut = max(s.rfind("+"), s.rfind("-"))
    real_txt, imag_txt = (s[:cut], s[cut:]) if cut > 0 else ("", s)
    m = _IMAG.fullmatch(imag_txt)
    if m is None:
        raise ParseError(f"malformed scalar {text!r}")
    im = _rat(m["mag"]) if m["mag"] else Fraction(1)
    if m["sign"] == "-":
        im = -im
    re_val = _rat(real_txt) if real_txt else Fraction(0)
    return GaussianRational(re_val, im)


def _fmt_rat(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(z: GaussianRational) -> str:
    re_val, im_val = z.real, z.imag
    if im_val == 0:
        return _fmt_rat(re_val)
    im_txt = "i" if abs(im_val) == 1 else _fmt_rat(abs(im_val)) + "*i"
    if re_val == 0:
        return ("-" if im_val < 0 else "") + im_txt
    return _fmt_rat(re_val) + ("-" if im_val < 0 else "+") + im_txt
