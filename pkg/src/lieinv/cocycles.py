"""Twisted cocycles Z^q(L, ad, kappa) and the six-parameter 2-cocycle spaces.

A q-cochain c is stored by its values on strictly increasing index tuples;
unknown ``target * N + tuple_index`` is the e_target coordinate of
c(e_t1, ..., e_tq), where N = C(n, q).  For q = 1 this is the row-major
layout of an operator matrix.

The kappa-twisted condition on arguments x_1, ..., x_(q+1) reads

    0 = sum_i (-1)^(i+1) kappa_ii [x_i, c(.. x_i omitted ..)]
      + sum_{i<j} (-1)^(i+j) kappa_ij c([x_i, x_j], .. x_i, x_j omitted ..)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .algebra import StructureConstants, matmul
from .errors import KindMismatch, UnsupportedDegree
from .linalg import nullspace, rank
from .scalar import ONE, ZERO, Scalar, scalar


def _sorted_sign(t):
    """(sorted tuple, sign) or (None, 0) when t has a repeated index."""
    if len(set(t)) < len(t):
        return None, 0
    lst = list(t)
    sign = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
    return tuple(lst), sign


def tuple_index(n, q):
    return {t: k for k, t in enumerate(combinations(range(n), q))}


def cochain_dim(n, q):
    return n * len(tuple_index(n, q))


def is_alternating(kappa) -> bool:
    m = len(kappa)
    diag = {i: kappa[i][i] for i in range(m)}
    off = [kappa[i][j] for i in range(m) for j in range(i + 1, m)]
    return all(diag[i] == diag[0] for i in diag) and all(v == off[0] for v in off)


def cocycle_template(sc: StructureConstants, q: int, alternating: bool):
    """Rows {unknown: {(i, j): coefficient}} with kappa positions i <= j."""
    cache = sc.__dict__.setdefault("_coc_templates", {})
    key = (q, alternating)
    if key in cache:
        return cache[key]
    n = sc.dim
    idx = tuple_index(n, q)
    N = len(idx)
    C = sc.c
    P = sc.prod
    args = combinations(range(n), q + 1) if alternating else product(range(n), repeat=q + 1)
    rows = []
    for t in args:
        for s in range(n):
            row: dict = {}

            def add(col, kpos, v):
                slot = row.setdefault(col, {})
                nv = slot.get(kpos, ZERO) + v
                if nv:
                    slot[kpos] = nv
                else:
                    slot.pop(kpos, None)

            for i in range(q + 1):
                rest = t[:i] + t[i + 1:]
                srt, sg = _sorted_sign(rest)
                if not sg:
                    continue
                sign = sg if i % 2 == 0 else -sg
                a = t[i]
                ti = idx[srt]
                for u in range(n):
                    v = C[a][u][s]
                    if v:
                        add(u * N + ti, (i, i), v if sign > 0 else -v)
            for i in range(q + 1):
                for j in range(i + 1, q + 1):
                    rest = t[:i] + t[i + 1:j] + t[j + 1:]
                    base = 1 if (i + j) % 2 == 0 else -1
                    for k, v in P[t[i]][t[j]].items():
                        srt, sg = _sorted_sign((k,) + rest)
                        if not sg:
                            continue
                        sign = base * sg
                        add(s * N + idx[srt], (i, j), v if sign > 0 else -v)
            row = {c: d for c, d in row.items() if d}
            if row:
                rows.append(row)
    cache[key] = rows
    return rows


def instantiate_kappa(template, kappa):
    out = []
    for row in template:
        r = {}
        for col, d in row.items():
            acc = None
            for (i, j), cf in d.items():
                kv = kappa[i][j]
                if not kv:
                    continue
                term = kv * cf
                acc = term if acc is None else acc + term
            if acc is not None and acc:
                r[col] = acc
        if r:
            out.append(r)
    return out


def _check(sc, q):
    if sc.kind != "lie":
        raise KindMismatch("cocycle spaces are defined for Lie algebras")
    if not 0 <= q <= 3:
        raise UnsupportedDegree(f"cochain degree {q} not supported (1..3)")


def cocycle_system(sc, q, kappa):
    _check(sc, q)
    m = q + 1
    if len(kappa) != m or any(len(r) != m for r in kappa):
        raise ValueError(f"kappa must be a symmetric {m}x{m} matrix")
    for i in range(m):
        for j in range(m):
            if kappa[i][j] != kappa[j][i]:
                raise ValueError("kappa must be symmetric")
    tmpl = cocycle_template(sc, q, is_alternating(kappa))
    return instantiate_kappa(tmpl, kappa)


def cocycle_space(sc: StructureConstants, q: int, kappa):
    """(dim, basis) of Z^q(L, ad, kappa); basis vectors in cochain coordinates."""
    if q < 1:
        raise UnsupportedDegree("cocycle degree must be 1, 2 or 3")
    kappa = [[scalar(x) for x in row] for row in kappa]
    rows = cocycle_system(sc, q, kappa)
    return nullspace(rows, cochain_dim(sc.dim, q))


@dataclass(frozen=True)
class SixParams:
    a1: object
    a2: object
    a3: object
    b1: object
    b2: object
    b3: object

    @staticmethod
    def of(*vals) -> "SixParams":
        return SixParams(*(scalar(v) for v in vals))

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.b3)

    def kappa(self):
        return [[self.b1, self.a2, self.a3],
                [self.a2, self.b3, self.a1],
                [self.a3, self.a1, self.b2]]

    def __str__(self):
        return "B(" + ",".join(str(x) for x in self.as_tuple()) + ")"


def two_cocycle_system(sc, p: SixParams):
    return cocycle_system(sc, 2, p.kappa())


def two_cocycle_space(sc, p: SixParams):
    if not isinstance(p, SixParams):
        p = SixParams.of(*p)
    return nullspace(two_cocycle_system(sc, p), cochain_dim(sc.dim, 2))


def six_permutations(p: SixParams):
    a1, a2, a3, b1, b2, b3 = p.as_tuple()
    return [SixParams(a1, a2, a3, b1, b2, b3), SixParams(a3, a1, a2, b3, b1, b2),
            SixParams(a2, a3, a1, b2, b3, b1), SixParams(a1, a3, a2, b1, b3, b2),
            SixParams(a2, a1, a3, b2, b1, b3), SixParams(a3, a2, a1, b3, b2, b1)]


def canonicalize_six(p) -> tuple:
    """(representative, class tag 1..16) following the four-by-four case split."""
    if not isinstance(p, SixParams):
        p = SixParams.of(*p)
    a1, a2, a3, b1, b2, b3 = (scalar(x) for x in p.as_tuple())
    z, one = ZERO, ONE
    sa, sb = a2 + a3, b2 + b3
    if not sa and not sb:
        if not a2 and not b2:
            return SixParams(a1, z, z, b1, z, z), 1
        if not a2:
            return SixParams(a1, z, z, b1, one, -one), 2
        if not b2:
            return SixParams(a1, one, -one, b1, z, z), 3
        t = (a2 - a3) / (b2 - b3)
        return SixParams(a1, t, -t, b1, one, -one), 4
    if not sa:
        if not a2 and b2 != b3:
            return SixParams(a1 / sb, z, z, b1 / sb, one, z), 5
        if not a2:
            return SixParams(a1 / b2, z, z, b1 / b2, one, one), 6
        if b2 != b3:
            t = a2 / (b2 - b3)
            return SixParams(a1 / sb, t, -t, b1 / sb, one, z), 7
        return SixParams(a1 / b2, one, -one, b1 / b2, one, one), 8
    if not sb:
        if not b2 and a2 != a3:
            return SixParams(a1 / sa, one, z, b1 / sa, z, z), 9
        if not b2:
            return SixParams(a1 / a2, one, one, b1 / a2, z, z), 10
        if a2 != a3:
            g = b2 / (a2 - a3)
            return SixParams(a1 / sa, one, z, b1 / sa, g, -g), 11
        return SixParams(a1 / a2, one, one, b1 / a2, one, -one), 12
    if a2 != a3 and b2 != b3:
        s = sa / sb
        t = (a2 - a3) / (b2 - b3)
        half = Scalar(1) / 2
        return SixParams(a1 / sb, (s + t) * half, (s - t) * half, b1 / sb, one, z), 13
    if a2 != a3:
        m = sa / (2 * b2)
        return SixParams(a1 / b2, m + 1, m - 1, b1 / b2, one, one), 14
    if b2 != b3:
        m = sb / (2 * a2)
        return SixParams(a1 / a2, one, one, b1 / a2, m + 1, m - 1), 15
    return SixParams(a1 / b2, a2 / b2, a2 / b2, b1 / b2, one, one), 16


# ---------------------------------------------------------------------------
# untwisted coboundaries and cohomology


def coboundary_matrix(sc: StructureConstants, q: int):
    """Dense matrix of d: C^q -> C^(q+1) in cochain coordinates (q >= 0)."""
    _check(sc, q)
    n = sc.dim
    ones = [[ONE] * (q + 1) for _ in range(q + 1)]
    src_dim = cochain_dim(n, q)
    idx_next = tuple_index(n, q + 1)
    N1 = len(idx_next)
    out = [[ZERO] * src_dim for _ in range(n * N1)]
    for (tidx, s), row in _full_rows(sc, q):
        dest = out[s * N1 + tidx]
        for col, d in row.items():
            acc = ZERO
            for (i, j), cf in d.items():
                acc = acc + ones[i][j] * cf
            dest[col] = acc
    return out


def _full_rows(sc, q):
    n = sc.dim
    idx = tuple_index(n, q)
    N = len(idx)
    C = sc.c
    P = sc.prod
    result = []
    for tidx, t in enumerate(combinations(range(n), q + 1)):
        for s in range(n):
            row: dict = {}
            for i in range(q + 1):
                rest = t[:i] + t[i + 1:]
                srt, sg = _sorted_sign(rest)
                if not sg:
                    continue
                sign = sg if i % 2 == 0 else -sg
                for u in range(n):
                    v = C[t[i]][u][s]
                    if v:
                        d = row.setdefault(u * N + idx[srt], {})
                        d[(i, i)] = d.get((i, i), ZERO) + (v if sign > 0 else -v)
            for i in range(q + 1):
                for j in range(i + 1, q + 1):
                    rest = t[:i] + t[i + 1:j] + t[j + 1:]
                    base = 1 if (i + j) % 2 == 0 else -1
                    for k, v in P[t[i]][t[j]].items():
                        srt, sg = _sorted_sign((k,) + rest)
                        if not sg:
                            continue
                        sign = base * sg
                        d = row.setdefault(s * N + idx[srt], {})
                        d[(i, j)] = d.get((i, j), ZERO) + (v if sign > 0 else -v)
            result.append(((tidx, s), row))
    return result


def cohomology_dims(sc: StructureConstants, q: int):
    """(dim Z^q, dim B^q, dim H^q) for the adjoint representation."""
    if q not in (1, 2, 3):
        raise UnsupportedDegree("cohomology computed for q = 1, 2, 3")
    ones = [[ONE] * (q + 1) for _ in range(q + 1)]
    z, _ = cocycle_space(sc, q, ones)
    b = rank(coboundary_matrix(sc, q - 1))
    return z, b, z - b


def dd_zero(sc: StructureConstants, q: int) -> bool:
    """True when d_(q+1) o d_q vanishes identically."""
    prodm = matmul(coboundary_matrix(sc, q + 1), coboundary_matrix(sc, q))
    return all(not x for row in prodm for x in row)
