"""Exact scalars over the Gaussian rationals Q(i).

Real values are stored as :class:`gmpy2.mpq`; values with a nonzero
imaginary part are :class:`GaussianRational`. Every arithmetic result is
put back into this canonical form, so two equal scalars always have the
same type and compare equal structurally.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "Scalar",
    "as_scalar",
    "conj",
    "format_scalar",
    "parse_scalar",
    "ZERO",
    "ONE",
]

ZERO = mpq(0)
ONE = mpq(1)

_MPQ = type(ZERO)


class GaussianRational:
    """``re + im*i`` with rational parts and ``im != 0``.

    Do not construct directly when the imaginary part may vanish; use
    :func:`gaussian` which collapses to a real ``mpq``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = mpq(re)
        self.im = mpq(im)

    # numbers.Complex-style accessors, so kernels can treat mpq and
    # GaussianRational alike.
    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return True  # im != 0 by construction

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (_MPQ, int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(complex(self.re, self.im)) ^ hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return gaussian(self.re + other.re, self.im + other.im)
        if isinstance(other, (_MPQ, int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return gaussian(self.re - other.re, self.im - other.im)
        if isinstance(other, (_MPQ, int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (_MPQ, int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return gaussian(a * c - b * d, a * d + b * c)
        if isinstance(other, (_MPQ, int, Fraction)):
            if not other:
                return ZERO
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def _inverse(self):
        norm = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other._inverse()
        if isinstance(other, (_MPQ, int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            other = mpq(other)
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (_MPQ, int, Fraction)):
            return self._inverse() * mpq(other)
        return NotImplemented

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[_MPQ, GaussianRational]


def gaussian(re, im) -> Scalar:
    """Canonical scalar for ``re + im*i``."""
    if im:
        return GaussianRational(re, im)
    return mpq(re)


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, complex-with-integer-parts, strings to a Scalar."""
    if type(x) is _MPQ or type(x) is GaussianRational:
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        # only accepted when both parts are exactly representable
        return gaussian(mpq(Fraction(x.real)), mpq(Fraction(x.imag)))
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars; pass a string or Fraction")
    try:
        return mpq(x)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"cannot convert {x!r} to an exact scalar") from exc


def conj(x: Scalar) -> Scalar:
    if type(x) is GaussianRational:
        return GaussianRational(x.re, -x.im)
    return x


_RAT = r"[+-]?\d+(?:/\d+)?"
_FULL = re.compile(rf"^(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?)i$")
_IMAG = re.compile(r"^(?P<im>[+-]?(?:\d+(?:/\d+)?)?)i$")
_REAL = re.compile(rf"^{_RAT}$")


def _rational(text: str):
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return mpq(int(num), int(den))
    return mpq(int(text))


def _imag_coeff(text: str):
    if text in ("", "+"):
        return ONE
    if text == "-":
        return -ONE
    return _rational(text)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p"``, ``"p/q"``, ``"p/q+r/t i"``, ``"p-i"``, ``"3i"``.

    Whitespace anywhere is ignored; a bare ``i`` means ``1i``.
    """
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty scalar")
    if _REAL.match(s):
        return _rational(s)
    m = _FULL.match(s)
    if m:
        return gaussian(_rational(m["re"]), _imag_coeff(m["im"]))
    m = _IMAG.match(s)
    if m:
        return gaussian(ZERO, _imag_coeff(m["im"]))
    raise ValueError(f"malformed scalar {text!r}")


def _fmt_rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Inverse of :func:`parse_scalar`; real values never carry an ``i`` term."""
    if type(x) is GaussianRational:
        im = x.im
        sign = "-" if im < 0 else "+"
        return f"{_fmt_rational(x.re)}{sign}{_fmt_rational(abs(im))}i"
    return _fmt_rational(mpq(x))
