"""Exact Gaussian rationals: elements re + im*i of Q(i)."""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from .errors import ParseError

_ZERO = mpq(0)


def _q(x):
    if type(x) is mpq:
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _q(re)
        self.im = _q(im)

    @staticmethod
    def _raw(re, im):
        s = Scalar.__new__(Scalar)
        s.re = re
        s.im = im
        return s

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point values are not exact scalars")
        if isinstance(x, (int, Fraction)) or type(x) is mpq:
            return Scalar._raw(_q(x), _ZERO)
        if isinstance(x, str):
            return Scalar.parse(x)
        return NotImplemented

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._raw(self.re * o.re, _ZERO)
        return Scalar._raw(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._raw(1 / self.re, _ZERO)
        n = self.re * self.re + self.im * self.im
        return Scalar._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.im:
            if not o.re:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar._raw(self.re / o.re, self.im / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers of scalars")
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im)

    # comparisons ------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _co(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def sort_key(self):
        return (self.re, self.im)

    def bit_size(self) -> int:
        return sum(int(abs(x.numerator)).bit_length() + int(x.denominator).bit_length()
                   for x in (self.re, self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    # text -------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{self}')"

    @staticmethod
    def parse(text: str) -> "Scalar":
        from .exprs import evaluate
        value = evaluate(text, {"i": I})
        if not isinstance(value, Scalar):
            raise ParseError(f"not a scalar: {text!r}")
        return value


def _co(x):
    if type(x) is Scalar:
        return x
    return Scalar.coerce(x)


def _fmt_q(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(s: Scalar) -> str:
    if not s.im:
        return _fmt_q(s.re)
    if s.im == 1:
        imag = "i"
    elif s.im == -1:
        imag = "-i"
    else:
        imag = _fmt_q(s.im) + "*i"
    if not s.re:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return _fmt_q(s.re) + sign + imag


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def scalar(x) -> Scalar:
    """Build a Scalar from int, Fraction, text or Scalar."""
    s = Scalar.coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to Scalar")
    return s
