"""Invariant step functions psi, psi0, phi, phi0.

A function is stored as a generic value plus pairwise coprime monic
squarefree polynomials, each carrying the value taken at all of its roots.
Exceptional points are never isolated numerically: conjugate roots of one
factor over Q(i) always share the value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import StructureConstants
from .cocycles import SixParams, cochain_dim, two_cocycle_system
from .derivations import derivation_system
from .errors import KindMismatch
from .linalg import param_step_rank
from .scalar import Scalar, scalar
from .unipoly import UniPoly, coprime_base, field_roots, numeric_roots, poly_gcd, poly_sort_key

WHICH = ("psi", "psi0", "phi", "phi0")


@dataclass
class InvariantFunction:
    generic: int
    exceptional: list = field(default_factory=list)  # (factor, value)

    # evaluation ----------------------------------------------------------
    def __call__(self, point) -> int:
        return evaluate(self, point)

    def normalized(self) -> "InvariantFunction":
        """One factor per distinct value (product of all factors carrying it)."""
        by_value: dict = {}
        for f, v in self.exceptional:
            if v == self.generic:
                continue
            by_value[v] = by_value[v] * f if v in by_value else f
        items = sorted(((f.monic(), v) for v, f in by_value.items()),
                       key=lambda t: (t[1], poly_sort_key(t[0])))
        return InvariantFunction(self.generic, items)

    def __eq__(self, other):
        if not isinstance(other, InvariantFunction):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.generic == b.generic and a.exceptional == b.exceptional

    def split_linear(self) -> "InvariantFunction":
        """Factors refined into rational linear pieces where possible (display)."""
        out = []
        for f, v in self.exceptional:
            for piece in _split_rational(f):
                out.append((piece, v))
        out.sort(key=lambda t: poly_sort_key(t[0]))
        return InvariantFunction(self.generic, out)

    def signature(self) -> "OccurrenceSignature":
        return signature(self)

    def values(self):
        return sorted({v for _, v in self.exceptional})

    def to_json(self):
        f = self.split_linear()
        return {"generic": f.generic,
                "exceptional": [{"factor": str(p), "roots_display": roots_display(p), "value": v}
                                for p, v in f.exceptional]}

    def __str__(self):
        return render_table(self)


def _split_rational(f: UniPoly):
    pieces = []
    rest = f
    for r in field_roots(f):
        lin = UniPoly.linear_root(r)
        pieces.append(lin)
        rest = rest // lin
    if not rest.is_constant():
        pieces.append(rest.monic())
    if not pieces:
        pieces = [f]
    return pieces


def evaluate(f: InvariantFunction, point) -> int:
    p = scalar(point)
    for fac, v in f.exceptional:
        if not fac(p):
            return v
    return f.generic


def function_from_points(generic: int, points) -> InvariantFunction:
    """Build from {point: value} where a point is a Scalar (or text) or a UniPoly
    whose roots all carry the value. Points at the generic value are dropped."""
    items = []
    for pt, v in points.items() if isinstance(points, dict) else points:
        if v == generic:
            continue
        fac = pt if isinstance(pt, UniPoly) else UniPoly.linear_root(scalar(pt))
        items.append((fac.monic(), v))
    return InvariantFunction(generic, items).normalized()


# ---------------------------------------------------------------------------
# comparison


@dataclass
class Comparison:
    holds: bool
    witness: object = None  # factor polynomial where the inequality fails
    left: int | None = None
    right: int | None = None

    def __bool__(self):
        return self.holds

    def witness_text(self):
        if self.witness is None:
            return ""
        return f"{roots_display(self.witness)}: {self.left} > {self.right}"


def _refine(f: InvariantFunction, g: InvariantFunction):
    """Common refinement: list of (piece, f value, g value) over all pieces
    where either function is exceptional."""
    base = coprime_base([p for p, _ in f.exceptional] + [p for p, _ in g.exceptional])
    out = []
    for piece in base:
        fv = next((v for p, v in f.exceptional if not poly_gcd(p, piece).is_constant()), f.generic)
        gv = next((v for p, v in g.exceptional if not poly_gcd(p, piece).is_constant()), g.generic)
        out.append((piece, fv, gv))
    return out


def leq(f: InvariantFunction, g: InvariantFunction) -> Comparison:
    """Decide f(alpha) <= g(alpha) for every complex alpha."""
    for piece, fv, gv in _refine(f, g):
        if fv > gv:
            return Comparison(False, piece, fv, gv)
    if f.generic > g.generic:
        pts = [p for p, _ in f.exceptional] + [p for p, _ in g.exceptional]
        t = _avoiding_point(pts)
        return Comparison(False, UniPoly.linear_root(t), f.generic, g.generic)
    return Comparison(True)


def _avoiding_point(polys):
    k = 0
    while True:
        cand = Scalar(k + 7, 0) / 3
        if all(p(cand) for p in polys):
            return cand
        k += 1


@dataclass
class OccurrenceSignature:
    generic: int
    counts: dict

    def __str__(self):
        parts = [f"{v}_{m}" for v, m in sorted(self.counts.items(), reverse=True)]
        return ", ".join(parts + [str(self.generic)])


def signature(f: InvariantFunction) -> OccurrenceSignature:
    counts: dict = {}
    for fac, v in f.exceptional:
        if v == f.generic:
            continue
        counts[v] = counts.get(v, 0) + fac.degree
    return OccurrenceSignature(f.generic, counts)


# ---------------------------------------------------------------------------
# computation


def parametric_system(sc: StructureConstants, which: str):
    """(rows, ncols) with entries polynomial in alpha."""
    x = UniPoly.x()
    one = UniPoly.const(1)
    zero = UniPoly.const(0)
    if which == "psi":
        return derivation_system(sc, [(x, one, one)]), sc.dim ** 2
    if which == "psi0":
        return derivation_system(sc, [(x, one, zero)]), sc.dim ** 2
    if sc.kind != "lie":
        raise KindMismatch(f"{which} is defined for Lie algebras")
    if which == "phi":
        p = SixParams(one, one, one, x, x, x)
    elif which == "phi0":
        p = SixParams(zero, one, one, x, one, one)
    else:
        raise ValueError(f"unknown invariant function {which!r}")
    return two_cocycle_system(sc, p), cochain_dim(sc.dim, 2)


def invariant_function(sc: StructureConstants, which: str) -> InvariantFunction:
    rows, ncols = parametric_system(sc, which)
    sr = param_step_rank(rows, ncols)
    items = [(f, ncols - r) for f, r in sr.exceptional]
    return InvariantFunction(ncols - sr.generic_rank, items)


def brute_force_value(sc: StructureConstants, which: str, point) -> int:
    """Dimension of the solution space at one concrete alpha (no step rank)."""
    from .cocycles import two_cocycle_space
    from .derivations import derivation_space
    t = scalar(point)
    if which == "psi":
        return derivation_space(sc, [(t, 1, 1)]).dim
    if which == "psi0":
        return derivation_space(sc, [(t, 1, 0)]).dim
    if which == "phi":
        return two_cocycle_space(sc, SixParams.of(1, 1, 1, t, t, t))[0]
    if which == "phi0":
        return two_cocycle_space(sc, SixParams.of(0, 1, 1, t, 1, 1))[0]
    raise ValueError(which)


# ---------------------------------------------------------------------------
# display


def _fmt_complex(z: complex) -> str:
    re = f"{z.real:.10g}"
    if abs(z.imag) < 1e-12:
        return re
    im = f"{abs(z.imag):.10g}"
    if abs(z.real) < 1e-12:
        return ("-" if z.imag < 0 else "") + im + "i"
    return f"{re}{'-' if z.imag < 0 else '+'}{im}i"


def _gauss_sqrt(s: Scalar):
    """Square root in Q(i) when it exists."""
    from gmpy2 import is_square, isqrt, mpq

    def qsqrt(x):
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        if is_square(n) and is_square(d):
            return mpq(isqrt(n), isqrt(d))
        return None

    if not s.im:
        r = qsqrt(s.re)
        if r is not None:
            return Scalar(r)
        r = qsqrt(-s.re)
        return Scalar(0, r) if r is not None else None
    norm = qsqrt(s.re * s.re + s.im * s.im)
    if norm is None:
        return None
    a = qsqrt((s.re + norm) / 2)
    if a is None or not a:
        return None
    b = s.im / (2 * a)
    return Scalar(a, b)


def roots_display(p: UniPoly) -> str:
    if p.degree == 1:
        return str(-p.monic().coeffs[0])
    if p.degree == 2:
        q = p.monic()
        b, c = q.coeffs[1], q.coeffs[0]
        disc = b * b - 4 * c
        r = _gauss_sqrt(disc)
        if r is not None:
            half = Scalar(1) / 2
            r1, r2 = (-b + r) * half, (-b - r) * half
            return f"{r1}, {r2}"
    approx = ", ".join(_fmt_complex(z) for z in numeric_roots(p))
    return f"roots of {p} ≈ {approx}"


def render_table(f: InvariantFunction, label="f") -> str:
    g = f.split_linear()
    heads = ["α"] + [roots_display(p) for p, _ in g.exceptional] + [""]
    vals = [label] + [str(v) for _, v in g.exceptional] + [str(g.generic)]
    widths = [max(len(a), len(b)) for a, b in zip(heads, vals)]
    line1 = " | ".join(h.ljust(w) for h, w in zip(heads, widths))
    line2 = " | ".join(v.ljust(w) for v, w in zip(vals, widths))
    return line1.rstrip() + "\n" + line2.rstrip()
