"""Univariate polynomials over Q(i) in the indeterminate alpha."""

from __future__ import annotations

from functools import reduce

from .errors import ParseError, ZeroPolynomial
from .scalar import ONE, ZERO, Scalar, scalar

VAR = "α"  # α


class UniPoly:
    """Immutable polynomial; ``coeffs`` lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Scalar else scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def _raw(cs):
        p = UniPoly.__new__(UniPoly)
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        p.coeffs = tuple(cs)
        return p

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly._raw((scalar(c),))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly._raw((ZERO, ONE))

    @staticmethod
    def linear_root(r) -> "UniPoly":
        """The monic polynomial alpha - r."""
        return UniPoly._raw((-scalar(r), ONE))

    @staticmethod
    def from_roots(roots) -> "UniPoly":
        return reduce(lambda p, r: p * UniPoly.linear_root(r), roots, UniPoly.const(1))

    @staticmethod
    def coerce(x):
        if isinstance(x, UniPoly):
            return x
        s = Scalar.coerce(x)
        if s is NotImplemented:
            return NotImplemented
        return UniPoly._raw((s,))

    # basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def constant_value(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = UniPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def bit_size(self) -> int:
        return sum(c.bit_size() for c in self.coeffs)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = UniPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = UniPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = UniPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if type(other) is Scalar:
            if not other:
                return ZERO_POLY
            return UniPoly._raw(tuple(c * other for c in self.coeffs))
        o = UniPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            return UniPoly._raw(tuple(c * b[0] for c in a))
        if len(a) == 1:
            return UniPoly._raw(tuple(a[0] * c for c in b))
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ONE_POLY
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "UniPoly":
        return self * scalar(c)

    def divmod(self, other: "UniPoly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        inv_lc = d[-1].inverse()
        if len(rem) < len(d):
            return ZERO_POLY, self
        quot = [ZERO] * (len(rem) - len(d) + 1)
        for k in range(len(rem) - len(d), -1, -1):
            c = rem[k + len(d) - 1] * inv_lc
            quot[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] = rem[k + j] - c * y
        return UniPoly._raw(quot), UniPoly._raw(rem[: len(d) - 1])

    def __floordiv__(self, other):
        return self.divmod(UniPoly.coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(UniPoly.coerce(other))[1]

    def __truediv__(self, other):
        if type(other) is Scalar or not isinstance(other, UniPoly):
            return self * scalar(other).inverse()
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> "UniPoly":
        if not self.coeffs or self.coeffs[-1].is_one():
            return self
        inv = self.coeffs[-1].inverse()
        return UniPoly._raw(tuple(c * inv for c in self.coeffs))

    def __call__(self, point):
        """Horner evaluation at a Scalar (or anything supporting + and *)."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return ZERO if acc is None else acc

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*alpha + b)."""
        lin = UniPoly._raw((scalar(b), scalar(a)))
        acc = ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    # text ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"UniPoly('{self}')"

    @staticmethod
    def parse(text: str, var: str = VAR) -> "UniPoly":
        from .exprs import evaluate
        from .scalar import I
        value = evaluate(text, {var: UniPoly.x(), "i": I,
                                "__int__": lambda k: UniPoly.const(k)})
        value = UniPoly.coerce(value)
        if value is NotImplemented:
            raise ParseError(f"not a polynomial: {text!r}")
        return value


ZERO_POLY = UniPoly._raw(())
ONE_POLY = UniPoly._raw((ONE,))


def _coeff_text(c: Scalar) -> str:
    s = str(c)
    if c.im and c.re:
        return f"({s})"
    return s


def format_poly(p: UniPoly, var: str = VAR) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            term = _coeff_text(c)
        elif c.is_one():
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = _coeff_text(c) + "*" + mono
        if parts and not term.startswith("-"):
            parts.append("+")
        parts.append(term)
    return "".join(parts)


# A prime with p = 1 mod 4, so that i has an image in F_p.
_P = 1000000009
_I_MOD_P = next(pow(g, (_P - 1) // 4, _P) for g in range(2, 100)
                if pow(g, (_P - 1) // 2, _P) == _P - 1)


def _mod_p(poly: UniPoly):
    """Coefficients in F_p, or None when a denominator or the leading
    coefficient vanishes mod p."""
    out = []
    for c in poly.coeffs:
        v = 0
        for q, unit in ((c.re, 1), (c.im, _I_MOD_P)):
            if q:
                den = int(q.denominator) % _P
                if not den:
                    return None
                v += int(q.numerator) * unit * pow(den, -1, _P)
        out.append(v % _P)
    if not out or not out[-1]:
        return None
    return out


def _coprime_mod_p(a: UniPoly, b: UniPoly) -> bool:
    """True only when gcd(a, b) is certainly constant.

    Reduction at a prime keeping both degrees can only raise the gcd degree."""
    x, y = _mod_p(a), _mod_p(b)
    if x is None or y is None:
        return False
    while y:
        inv = pow(y[-1], -1, _P)
        while len(x) >= len(y):
            f = x[-1] * inv % _P
            off = len(x) - len(y)
            for k, c in enumerate(y):
                x[off + k] = (x[off + k] - f * c) % _P
            while x and not x[-1]:
                x.pop()
            if not x:
                break
        x, y = y, x
    return len(x) == 1


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = UniPoly.coerce(p), UniPoly.coerce(q)
    if a.coeffs and b.coeffs and (len(a.coeffs) == 1 or len(b.coeffs) == 1 or _coprime_mod_p(a, b)):
        return ONE_POLY
    if b.coeffs:
        b = b.monic()
    while b.coeffs:
        r = a.divmod(b)[1]
        a, b = b, (r.monic() if r.coeffs else r)
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    if not p.coeffs:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.is_constant():
        return ONE_POLY
    return (p // poly_gcd(p, p.derivative())).monic()


def coprime_base(polys) -> list:
    """Pairwise coprime squarefree monic factors whose products recover the
    squarefree parts of all inputs (a gcd-free basis)."""
    basis: list[UniPoly] = []
    for p in polys:
        if p.is_constant():
            continue
        p = squarefree_part(p)
        new = []
        for q in basis:
            if p.is_constant():
                new.append(q)
                continue
            g = poly_gcd(p, q)
            if g.is_constant():
                new.append(q)
                continue
            new.append(g)
            rest = (q // g).monic()
            if not rest.is_constant():
                new.append(rest)
            p = (p // g).monic()
        if not p.is_constant():
            new.append(p)
        basis = new
    return sorted(basis, key=poly_sort_key)


def poly_sort_key(p: UniPoly):
    return (p.degree, tuple(c.sort_key() for c in p.coeffs))


def rational_roots(p: UniPoly) -> list:
    """Roots in Q of a polynomial with rational coefficients (candidates from
    the rational root theorem). Gaussian coefficients return []."""
    from fractions import Fraction
    from math import lcm
    if any(c.im for c in p.coeffs) or p.degree < 1:
        return []
    den = lcm(*[int(c.re.denominator) for c in p.coeffs])
    ints = [int(c.re * den) for c in p.coeffs]
    roots = []
    while ints and ints[0] == 0:
        roots.append(Scalar(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    if max(a0, an) > _DIVISOR_LIMIT:
        return roots + [r for r in field_roots(UniPoly([Scalar(x) for x in ints])) if r.is_real()]
    q = UniPoly([Scalar(x) for x in ints])
    cand = {Fraction(sign * num, d) for num in _divisors(a0) for d in _divisors(an) for sign in (1, -1)}
    for r in sorted(cand):
        s = Scalar(r)
        if not q(s):
            roots.append(s)
    return roots


_DIVISOR_LIMIT = 10 ** 10


def numeric_roots(p: UniPoly, iterations: int = 500) -> list:
    """Floating-point approximations of all roots (Durand-Kerner)."""
    q = p.monic()
    cs = [c.to_complex() for c in q.coeffs]
    d = q.degree
    if d < 1:
        return []
    roots = [complex(0.4, 0.9) ** k for k in range(d)]
    for _ in range(iterations):
        new = []
        for i, r in enumerate(roots):
            val = 0j
            for c in reversed(cs):
                val = val * r + c
            den = 1 + 0j
            for j, s in enumerate(roots):
                if j != i:
                    den *= r - s
            new.append(r - val / den if den else r)
        if max(abs(a - b) for a, b in zip(new, roots)) < 1e-15:
            roots = new
            break
        roots = new
    return sorted(roots, key=lambda z: (round(z.real, 8), round(z.imag, 8)))


def field_roots(p: UniPoly) -> list:
    """All roots of p lying in Q(i), each verified exactly."""
    from fractions import Fraction
    if p.degree < 1:
        return []
    q = squarefree_part(p)
    found = []
    if all(not c.im for c in q.coeffs) and max(abs(c.re.numerator) for c in q.coeffs) <= _DIVISOR_LIMIT:
        found = rational_roots(q)
    rest = q
    for r in found:
        rest = rest // UniPoly.linear_root(r)
    for z in numeric_roots(rest) if rest.degree >= 1 else []:
        cand = Scalar(Fraction(z.real).limit_denominator(10 ** 6),
                      Fraction(z.imag).limit_denominator(10 ** 6))
        if cand not in found and not rest(cand):
            found.append(cand)
    return sorted(found, key=lambda s: s.sort_key())


def _divisors(n: int):
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))
