"""Dynamic evaluation: arithmetic in Q(i)[x]/(m) for a squarefree modulus m.

When an element that must be inverted shares a proper factor with the
modulus, the computation cannot continue uniformly; a ``Split`` is raised
carrying the two coprime factors so the caller can rerun on each branch.
"""

from __future__ import annotations

from .errors import Split, ZeroDivisorIsZero
from .scalar import Scalar, scalar
from .unipoly import ONE_POLY, ZERO_POLY, UniPoly, poly_gcd


class ExtScalar:
    __slots__ = ("modulus", "residue")

    def __init__(self, modulus: UniPoly, residue):
        self.modulus = modulus
        r = UniPoly.coerce(residue)
        if r.degree >= modulus.degree:
            r = r % modulus
        self.residue = r

    @staticmethod
    def _raw(modulus, residue):
        e = ExtScalar.__new__(ExtScalar)
        e.modulus = modulus
        e.residue = residue
        return e

    @staticmethod
    def generator(modulus: UniPoly) -> "ExtScalar":
        """The class of alpha modulo ``modulus``."""
        return ExtScalar(modulus, UniPoly.x())

    def _lift(self, other):
        if isinstance(other, ExtScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli in extension arithmetic")
            return other.residue
        if isinstance(other, UniPoly):
            return other % self.modulus if other.degree >= self.modulus.degree else other
        s = Scalar.coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return UniPoly._raw((s,))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtScalar._raw(self.modulus, self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtScalar._raw(self.modulus, self.residue - o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtScalar._raw(self.modulus, o - self.residue)

    def __neg__(self):
        return ExtScalar._raw(self.modulus, -self.residue)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        prod = self.residue * o
        if prod.degree >= self.modulus.degree:
            prod = prod % self.modulus
        return ExtScalar._raw(self.modulus, prod)

    __rmul__ = __mul__

    def inverse(self) -> "ExtScalar":
        out = ext_invert(self)
        if isinstance(out, Split):
            raise out
        return out

    def __truediv__(self, other):
        if not isinstance(other, ExtScalar):
            s = scalar(other)
            return ExtScalar._raw(self.modulus, self.residue * s.inverse())
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return bool(self.residue)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o

    def __hash__(self):
        return hash((self.modulus, self.residue))

    def __repr__(self):
        return f"ExtScalar({self.residue} mod {self.modulus})"


def _xgcd(a: UniPoly, b: UniPoly):
    """(g, s) with g = gcd(a, b) monic and s*a == g (mod b)."""
    r0, r1 = a, b
    s0, s1 = ONE_POLY, ZERO_POLY
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    lc = r0.lc()
    inv = lc.inverse()
    return r0 * inv, s0 * inv


def ext_invert(e: ExtScalar):
    """Inverse of ``e``, or ``Split(g, m/g)`` when the residue is a proper zero divisor."""
    m = e.modulus
    if not e.residue:
        raise ZeroDivisorIsZero(f"{e.residue} is zero modulo {m}")
    g, s = _xgcd(e.residue, m)
    if g.degree == 0:
        return ExtScalar(m, s)
    return Split(g, (m // g).monic())
