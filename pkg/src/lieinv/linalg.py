"""Exact linear solvers.

* ``nullspace`` / ``rank`` over Q(i) or over a dynamic extension,
* ``param_step_rank``: rank of a matrix of polynomials in alpha as an exact
  step function of alpha,
* ``generic_rank_multivar``: rank over the rational function field of a
  matrix of multivariate polynomials (fraction-free Bareiss elimination).

Matrices are passed either dense (list of lists) or sparse (list of
``{column: entry}`` dicts).  Internally everything is sparse.
"""

from __future__ import annotations

import random
from math import gcd, lcm
from collections import deque
from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import Split
from .extfield import ExtScalar
from .scalar import ONE, ZERO, Scalar
from .unipoly import UniPoly, coprime_base, poly_gcd, poly_sort_key, squarefree_part


def to_sparse(m, ncols=None):
    """Normalize a matrix to (list of sparse rows, ncols)."""
    rows = []
    width = 0
    for row in m:
        if isinstance(row, dict):
            d = {c: v for c, v in row.items() if v}
            if row:
                width = max(width, max(row) + 1)
        else:
            d = {c: v for c, v in enumerate(row) if v}
            width = max(width, len(row))
        rows.append(d)
    return rows, (width if ncols is None else ncols)


def _echelon(rows):
    """Row echelon form over a field. Returns list of (pivot_col, row) with
    every pivot normalized to 1. May raise Split for extension entries."""
    pivots: list[tuple[int, dict]] = []
    for src in rows:
        r = dict(src)
        for c, p in pivots:
            f = r.get(c)
            if f is None:
                continue
            for k, v in p.items():
                nv = r.get(k)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        c = min(r)
        inv = r[c].inverse()
        p = {k: v * inv for k, v in r.items()}
        p[c] = ONE if isinstance(r[c], Scalar) else p[c]
        pivots.append((c, p))
    return pivots


def rank(m, ncols=None) -> int:
    rows, _ = to_sparse(m, ncols)
    return len(_echelon(rows))


def rref(m, ncols=None):
    """Reduced row echelon form: list of (pivot_col, row) sorted by pivot."""
    rows, _ = to_sparse(m, ncols)
    piv = _echelon(rows)
    piv.sort(key=lambda t: t[0])
    # back substitution, last pivot first
    for idx in range(len(piv) - 1, -1, -1):
        c, p = piv[idx]
        for jdx in range(idx):
            cj, pj = piv[jdx]
            f = pj.get(c)
            if f is None:
                continue
            for k, v in p.items():
                nv = pj.get(k)
                nv = -f * v if nv is None else nv - f * v
                if nv:
                    pj[k] = nv
                else:
                    pj.pop(k, None)
    return piv


def nullspace(m, ncols=None):
    """(dim, basis) of the kernel; basis vectors are dense lists."""
    rows, n = to_sparse(m, ncols)
    piv = rref(rows, n)
    zero = Scalar(0)
    sample = next((v for r in rows for v in r.values()), None)
    if isinstance(sample, ExtScalar):
        zero = sample * 0
    one = zero + 1
    pivot_cols = {c for c, _ in piv}
    basis = []
    for f in range(n):
        if f in pivot_cols:
            continue
        v = [zero] * n
        v[f] = one
        for c, p in piv:
            x = p.get(f)
            if x is not None:
                v[c] = -x
        basis.append(v)
    return len(basis), basis


def row_space(vectors, ncols=None):
    """Reduced basis (dense rows) of the span of ``vectors``."""
    rows, n = to_sparse(vectors, ncols)
    piv = rref(rows, n)
    zero = Scalar(0)
    out = []
    for _, p in piv:
        v = [zero] * n
        for k, x in p.items():
            v[k] = x
        out.append(v)
    return out


def solve_in_span(basis, target, ncols=None):
    """Coefficients expressing ``target`` in the span of ``basis`` or None."""
    m = len(basis)
    n = ncols if ncols is not None else len(target)
    # columns of the system are the basis vectors, last column the target
    rows = []
    for k in range(n):
        row = {}
        for j, b in enumerate(basis):
            if b[k]:
                row[j] = b[k]
        if target[k]:
            row[m] = target[k]
        rows.append(row)
    piv = rref(rows, m + 1)
    coeffs = [Scalar(0)] * m
    for c, p in piv:
        if c == m:
            return None
        coeffs[c] = p.get(m, Scalar(0))
    return coeffs


# ---------------------------------------------------------------------------
# parametric step rank


@dataclass
class StepRank:
    n_cols: int
    generic_rank: int
    exceptional: list = field(default_factory=list)  # (monic factor, rank)

    def rank_at(self, point) -> int:
        for f, r in self.exceptional:
            if not f(point):
                return r
        return self.generic_rank


def _poly_rows(m, ncols):
    rows, n = to_sparse(m, ncols)
    out = []
    for r in rows:
        out.append({c: (v if isinstance(v, UniPoly) else UniPoly.coerce(v)) for c, v in r.items() if v})
    return out, n


def _reduce_poly_row(r, c, p, pv_const, assumptions):
    """Eliminate column c of r with pivot row p (pivot value p[c])."""
    f = r.pop(c, None)
    if f is None:
        return r
    if pv_const:
        # p is normalized: p[c] == 1
        for k, v in p.items():
            if k == c:
                continue
            nv = r.get(k)
            nv = -(f * v) if nv is None else nv - f * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
        return r
    pv = p[c]
    out = {}
    for k, v in r.items():
        out[k] = v * pv
    for k, v in p.items():
        if k == c:
            continue
        nv = out.get(k)
        nv = -(f * v) if nv is None else nv - f * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    out = {k: v for k, v in out.items() if v}
    _remove_content(out, assumptions)
    return out


def _make_primitive(r):
    """Scale r by a rational so its coefficients become coprime Gaussian integers."""
    den, num = 1, 0
    for v in r.values():
        for x in v.coeffs:
            for q in (x.re, x.im):
                if q:
                    den = lcm(den, q.denominator)
                    num = gcd(num, q.numerator)
    if num == 0 or (den == 1 and num == 1):
        return
    f = Scalar(mpq(den, num))
    for k in r:
        r[k] = r[k] * f


def _remove_content(r, assumptions):
    if not r:
        return
    _make_primitive(r)
    vals = sorted(r.values(), key=_entry_key)
    if vals[0].is_constant():
        return
    # the gcd of the two smallest entries is usually the whole content
    g = vals[0] if len(vals) == 1 else poly_gcd(vals[0], vals[1])
    if g.is_constant():
        return
    g = g.monic()
    quotients = {}
    for k, v in r.items():
        q, rem = v.divmod(g)
        if rem:
            break
        quotients[k] = q
    else:
        assumptions.append(squarefree_part(g))
        r.update(quotients)
        return
    for v in vals[2:]:
        g = poly_gcd(g, v)
        if g.is_constant():
            return
    assumptions.append(squarefree_part(g))
    for k in list(r):
        r[k] = r[k] // g


def _entry_key(v: UniPoly):
    return (v.degree, v.bit_size())


def _generic_poly_elimination(rows):
    """Fraction-free elimination preferring constant pivots.

    Returns (rank, assumptions) where the rank of m(alpha) equals ``rank``
    at every alpha not vanishing any assumption polynomial."""
    pivots: list[tuple[int, dict, bool]] = []
    assumptions: list[UniPoly] = []
    deferred: list[list] = []  # [row, reduced_upto]

    def bring_up_to_date(r, start):
        for idx in range(start, len(pivots)):
            c, p, pc = pivots[idx]
            if c in r:
                r = _reduce_poly_row(r, c, p, pc, assumptions)
                if not r:
                    return r
        return r

    def add_pivot(r, c):
        v = r[c]
        if v.is_constant():
            inv = v.constant_value().inverse()
            p = {k: x * inv for k, x in r.items()}
            pivots.append((c, p, True))
        else:
            assumptions.append(squarefree_part(v.monic()))
            pivots.append((c, r, False))

    for src in rows:
        r = bring_up_to_date(dict(src), 0)
        if not r:
            continue
        consts = [k for k, v in r.items() if v.is_constant()]
        if consts:
            add_pivot(r, min(consts))
        else:
            deferred.append([r, len(pivots)])

    while deferred:
        live = []
        for item in deferred:
            item[0] = bring_up_to_date(item[0], item[1])
            item[1] = len(pivots)
            if item[0]:
                live.append(item)
        deferred = live
        if not deferred:
            break
        chosen = None
        for pos, (r, _) in enumerate(deferred):
            consts = [k for k, v in r.items() if v.is_constant()]
            if consts:
                chosen = (pos, min(consts))
                break
        if chosen is None:
            best = None
            for pos, (r, _) in enumerate(deferred):
                for k in sorted(r):
                    key = (_entry_key(r[k]), pos, k)
                    if best is None or key < best[0]:
                        best = (key, pos, k)
            chosen = (best[1], best[2])
        pos, c = chosen
        r, _ = deferred.pop(pos)
        add_pivot(r, c)
    return len(pivots), assumptions


def _specialize_rows(rows, modulus: UniPoly):
    if modulus.degree == 1:
        root = -modulus.coeffs[0]
        out = []
        for r in rows:
            d = {}
            for k, v in r.items():
                x = v(root)
                if x:
                    d[k] = x
            out.append(d)
        return out
    out = []
    for r in rows:
        d = {}
        for k, v in r.items():
            e = ExtScalar(modulus, v)
            if e:
                d[k] = e
        out.append(d)
    return out


def rank_modulo(rows, modulus: UniPoly):
    """Ranks of m(alpha) at the roots of ``modulus``, as [(factor, rank)].

    Dynamic evaluation may split the modulus; each branch is re-solved."""
    rows, _ = _poly_rows(rows, None)
    queue = deque([modulus.monic()])
    results = []
    while queue:
        m = queue.popleft()
        try:
            results.append((m, len(_echelon(_specialize_rows(rows, m)))))
        except Split as s:
            queue.append(s.m1)
            queue.append(s.m2)
    return results


_CHEAP_CANDIDATES = 8


def _intersect(base, other):
    """Pairwise coprime factors of the common roots of two coprime bases."""
    out = []
    for c in base:
        for d in other:
            g = poly_gcd(c, d)
            if not g.is_constant():
                out.append(g.monic())
    return out


def _constant_recombine(rows, n):
    """Row echelon form under constant row operations, highest alpha power first.

    The result spans the same rows over Q(i), so the rank at every alpha is
    unchanged, and as many rows as possible end up free of alpha."""
    top = max((v.degree for r in rows for v in r.values()), default=0)
    stacked = [{(top - deg) * n + c: x for c, v in r.items() for deg, x in enumerate(v.coeffs) if x}
               for r in rows]
    out = []
    for _, p in _echelon(stacked):
        layers: dict = {}
        for key, x in p.items():
            shift, c = divmod(key, n)
            layers.setdefault(c, {})[top - shift] = x
        out.append({c: UniPoly([d.get(k, ZERO) for k in range(max(d) + 1)])
                    for c, d in layers.items()})
    return out


_CHEAP_CANDIDATES = 8


def _intersect(base, other):
    """Pairwise coprime factors of the common roots of two coprime bases."""
    out = []
    for c in base:
        for d in other:
            g = poly_gcd(c, d)
            if not g.is_constant():
                out.append(g.monic())
    return out


def _constant_independent(rows, n):
    """Subset of rows whose coefficient layers are independent over Q(i).

    Each dropped row is a constant combination of kept rows, so the rank at
    every alpha is unchanged."""
    stacked = [{deg * n + c: x for c, v in r.items() for deg, x in enumerate(v.coeffs) if x}
               for r in rows]
    kept: list[int] = []
    _echelon(stacked, kept)
    return [rows[k] for k in kept]


def param_step_rank(m, ncols=None) -> StepRank:
    rows, n = _poly_rows(m, ncols)
    rows = _constant_recombine(rows, n)
    generic, assumptions = _generic_poly_elimination(rows)
    candidates = coprime_base(assumptions)
    # Every elimination order yields a superset of the true exceptional roots;
    # spurious pivot factors rarely survive a second and third order.
    for order in (rows[::-1], random.Random(len(rows)).sample(rows, len(rows))):
        if sum(c.degree for c in candidates) <= _CHEAP_CANDIDATES:
            break
        again, more = _generic_poly_elimination(order)
        if again != generic:
            raise AssertionError("generic rank depends on the elimination order")
        candidates = _intersect(candidates, coprime_base(more))
    exceptional = []
    for cand in candidates:
        for factor, r in rank_modulo(rows, cand):
            if r > generic:
                raise AssertionError("specialized rank exceeds generic rank")
            if r < generic:
                exceptional.append((factor, r))
    exceptional.sort(key=lambda t: poly_sort_key(t[0]))
    return StepRank(n, generic, exceptional)


# ---------------------------------------------------------------------------
# generic rank of multivariate polynomial matrices


def generic_rank_multivar(m) -> int:
    """Rank over the field of rational functions (Bareiss, full pivoting)."""
    a = [list(row) for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = None
    rank_ = 0
    for k in range(min(nrows, ncols)):
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                if a[i][j]:
                    key = (len(a[i][j]), a[i][j].total_degree())
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, bi, bj = best
        a[k], a[bi] = a[bi], a[k]
        for row in a:
            row[k], row[bj] = row[bj], row[k]
        piv = a[k][k]
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                v = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = v if prev is None else v.exact_div(prev)
            a[i][k] = a[i][k] * 0
        prev = piv
        rank_ += 1
    return rank_
