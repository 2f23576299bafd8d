"""Classical invariants of Lie algebras: series dimensions, center, tau,
trace invariants chi_1..chi_3 and C_pq, and the inv tuple."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import StructureConstants
from .derivations import derivation_dim
from .errors import KindMismatch
from .linalg import generic_rank_multivar, nullspace, rref
from .multipoly import MultiPoly
from .scalar import ONE, ZERO, Scalar


def _require_lie(sc):
    if sc.kind != "lie":
        raise KindMismatch("this invariant is defined for Lie algebras")


# ---------------------------------------------------------------------------
# subspaces (lists of dense row vectors in reduced echelon form)


def _span(sc, vectors):
    n = sc.dim
    piv = rref([{k: x for k, x in enumerate(v) if x} for v in vectors], n)
    out = []
    for _, p in piv:
        v = [ZERO] * n
        for k, x in p.items():
            v[k] = x
        out.append(v)
    return out


def _whole(sc):
    n = sc.dim
    return [[ONE if k == j else ZERO for k in range(n)] for j in range(n)]


def bracket_span(sc: StructureConstants, a, b):
    """Basis of [A, B] for subspaces given by spanning vectors."""
    return _span(sc, [sc.multiply(u, v) for u in a for v in b])


def center(sc: StructureConstants):
    return _centralizer_mod(sc, [])


def _centralizer_mod(sc, sub):
    """{x : [x, L] is contained in span(sub)}."""
    n = sc.dim
    piv = rref([{k: x for k, x in enumerate(v) if x} for v in sub], n) if sub else []

    def reduce(v):
        r = dict((k, x) for k, x in enumerate(v) if x)
        for c, p in piv:
            f = r.get(c)
            if f is None:
                continue
            for k, x in p.items():
                nv = r.get(k, ZERO) - f * x
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    rows = []
    for j in range(n):
        red = [reduce(sc.c[i][j]) for i in range(n)]
        for s in range(n):
            row = {i: red[i][s] for i in range(n) if s in red[i]}
            if row:
                rows.append(row)
    _, basis = nullspace(rows, n)
    return basis


# ---------------------------------------------------------------------------
# series


@dataclass
class SeriesProfile:
    d: list
    l: list
    c: list
    solvable: bool
    nilpotent: bool

    def __str__(self):
        return "".join("(" + ",".join(str(x) for x in seq) + ")" for seq in (self.d, self.l, self.c))


def _chain(step, start, n, increasing=False):
    dims = [len(start)]
    cur = start
    while True:
        nxt = step(cur)
        if len(nxt) == len(cur):
            return dims
        dims.append(len(nxt))
        cur = nxt
        if not increasing and not nxt:
            return dims
        if increasing and len(nxt) == n:
            return dims


def series(sc: StructureConstants) -> SeriesProfile:
    _require_lie(sc)
    n = sc.dim
    whole = _whole(sc)
    d = _chain(lambda s: bracket_span(sc, s, s), whole, n)
    l = _chain(lambda s: bracket_span(sc, whole, s), whole, n)
    z = center(sc)
    if len(z) == n:
        c = [n]
    else:
        c = _chain(lambda s: _centralizer_mod(sc, s), z, n, increasing=True)
    return SeriesProfile(d, l, c, d[-1] == 0, l[-1] == 0)


def derived_algebra(sc):
    whole = _whole(sc)
    return bracket_span(sc, whole, whole)


# ---------------------------------------------------------------------------
# tau


def formal_matrix(sc: StructureConstants):
    """(M_L)_ij = sum_k c^k_ij x_k as MultiPoly entries."""
    n = sc.dim
    return [[MultiPoly.linear(sc.c[i][j]) for j in range(n)] for i in range(n)]


def tau(sc: StructureConstants) -> int:
    _require_lie(sc)
    return sc.dim - generic_rank_multivar(formal_matrix(sc))


# ---------------------------------------------------------------------------
# trace invariants


class _Undefined:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Undefined"

    __str__ = __repr__

    def __bool__(self):
        return False


Undefined = _Undefined()


def _ad_poly(sc, nvars, offset):
    """Matrix of ad x with x = sum_k x_(offset+k) e_k."""
    n = sc.dim
    m = [[MultiPoly(nvars) for _ in range(n)] for _ in range(n)]
    for k in range(n):
        var = MultiPoly.var(nvars, offset + k)
        for j in range(n):
            for s, v in sc.prod[k][j].items():
                m[s][j] = m[s][j] + var * v
    return m


def _pmatmul(a, b):
    n = len(a)
    nv = a[0][0].nvars
    out = [[MultiPoly(nv) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not a[i][k]:
                continue
            for j in range(n):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _trace(m):
    t = MultiPoly(m[0][0].nvars)
    for i in range(len(m)):
        t = t + m[i][i]
    return t


def _powers(m, top):
    out = [m]
    for _ in range(top - 1):
        out.append(_pmatmul(out[-1], m))
    return out


def proportionality(lhs: MultiPoly, rhs: MultiPoly):
    """The constant k with lhs = k * rhs, or Undefined (also if either is zero)."""
    if not lhs or not rhs:
        return Undefined
    e, c = rhs.leading()
    num = lhs.terms.get(e)
    if num is None:
        return Undefined
    k = num / c
    return k if lhs == rhs * k else Undefined


def trace_polys(sc):
    """(p111, p222, p333) as polynomials in the coordinates of x."""
    n = sc.dim
    pw = _powers(_ad_poly(sc, n, 0), 3)
    t1, t2, t3 = (_trace(p) for p in pw)
    p111 = -t1
    p222 = (t1 * t1 - t2) * (Scalar(1) / 2)
    p333 = (t1 * t1 * t1 - t1 * t2 * 3 + t3 * 2) * (Scalar(-1) / 6)
    return p111, p222, p333


def chi(sc: StructureConstants) -> dict:
    _require_lie(sc)
    p1, p2, p3 = trace_polys(sc)
    return {"chi1": proportionality(p2, p1 * p1),
            "chi2": proportionality(p3, p1 * p1 * p1),
            "chi3": proportionality(p3 * p3, p2 * p2 * p2)}


def cpq(sc: StructureConstants, p: int, q: int):
    _require_lie(sc)
    if not (1 <= p <= 3 and 1 <= q <= 3):
        raise ValueError("p and q must lie in 1..3")
    n = sc.dim
    ax = _powers(_ad_poly(sc, 2 * n, 0), p)[-1]
    ay = _powers(_ad_poly(sc, 2 * n, n), q)[-1]
    tx, ty = _trace(ax), _trace(ay)
    mixed = _trace(_pmatmul(ax, ay))
    if not tx or not ty or not mixed:
        return Undefined
    return proportionality(tx * ty, mixed)


# ---------------------------------------------------------------------------
# inv tuple


@dataclass
class InvTuple:
    series: SeriesProfile
    tau: int
    d111: int
    d011: int
    d110: int
    d111_011: int

    def dims(self):
        return [self.d111, self.d011, self.d110, self.d111_011]

    def __str__(self):
        return f"{self.series} {self.tau} [{','.join(str(x) for x in self.dims())}]"

    def to_json(self):
        s = self.series
        return {"derived": s.d, "lower_central": s.l, "upper_central": s.c,
                "solvable": s.solvable, "nilpotent": s.nilpotent, "tau": self.tau,
                "d111": self.d111, "d011": self.d011, "d110": self.d110,
                "d111_cap_d011": self.d111_011, "text": str(self)}


def inv_tuple(sc: StructureConstants) -> InvTuple:
    _require_lie(sc)
    return InvTuple(series(sc), tau(sc),
                    derivation_dim(sc, [(1, 1, 1)]), derivation_dim(sc, [(0, 1, 1)]),
                    derivation_dim(sc, [(1, 1, 0)]),
                    derivation_dim(sc, [(1, 1, 1), (0, 1, 1)]))
