import random

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from lieinv.linalg import (generic_rank_multivar, nullspace, param_step_rank, rank,
                           solve_in_span)
from lieinv.multipoly import MultiPoly
from lieinv.scalar import ZERO, Scalar
from lieinv.unipoly import UniPoly
from oracle import to_sympy

T = sp.Symbol("t")
entries = st.integers(-3, 3).map(Scalar)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def sym(m):
    return sp.Matrix([[to_sympy(x) for x in row] for row in m])


@given(matrices)
def test_rank_matches_sympy(m):
    assert rank(m) == sym(m).rank()


@given(matrices)
def test_nullspace_is_kernel(m):
    n = len(m[0])
    dim, basis = nullspace(m, n)
    assert dim == n - sym(m).rank()
    for v in basis:
        for row in m:
            assert sum((a * b for a, b in zip(row, v)), ZERO) == ZERO


@given(matrices)
def test_solve_in_span(m):
    coeffs = [Scalar(k + 1) for k in range(len(m))]
    target = [sum((coeffs[i] * m[i][j] for i in range(len(m))), ZERO) for j in range(len(m[0]))]
    sol = solve_in_span(m, target)
    assert sol is not None
    back = [sum((sol[i] * m[i][j] for i in range(len(m))), ZERO) for j in range(len(m[0]))]
    assert back == target


def _random_poly_matrix(rng, rows, cols, planted):
    """Product L * D(alpha) * R with D carrying planted polynomial pivots."""
    inner = min(rows, cols)
    diag = []
    for k in range(inner):
        if k < len(planted):
            diag.append(UniPoly.from_roots(planted[k]))
        elif rng.random() < 0.2:
            diag.append(UniPoly.const(0))
        else:
            diag.append(UniPoly.const(rng.randint(1, 3)))
    left = [[Scalar(rng.randint(-2, 2)) for _ in range(inner)] for _ in range(rows)]
    right = [[Scalar(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(inner)]
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = UniPoly.const(0)
            for k in range(inner):
                if left[i][k] and right[k][j]:
                    acc = acc + diag[k] * (left[i][k] * right[k][j])
            row.append(acc)
        out.append(row)
    return out


def _sympy_rank_at(m, point):
    return sp.Matrix([[sum(to_sympy(c) * point ** k for k, c in enumerate(e.coeffs)) for e in row]
                      for row in m]).rank()


def test_step_rank_against_pointwise_oracle():
    rng = random.Random(7)
    for trial in range(25):
        planted = [[Scalar(rng.randint(-3, 3)) for _ in range(rng.randint(1, 2))]
                   for _ in range(rng.randint(0, 2))]
        m = _random_poly_matrix(rng, rng.randint(2, 5), rng.randint(2, 5), planted)
        sr = param_step_rank(m, len(m[0]))
        points = {to_sympy(r) for grp in planted for r in grp} | {sp.Rational(17, 3), sp.I + 2}
        for f, _ in sr.exceptional:
            points |= {r for r in sp.roots(sp.Poly(sum(to_sympy(c) * T ** k
                                                       for k, c in enumerate(f.coeffs)), T))}
        for p in points:
            assert sr.rank_at(p if isinstance(p, Scalar) else _to_scalar(p)) == _sympy_rank_at(m, p)
        # strictness: exceptional ranks are strictly below the generic rank
        assert all(r < sr.generic_rank for _, r in sr.exceptional)


def _to_scalar(x):
    re, im = sp.Rational(sp.re(x)), sp.Rational(sp.im(x))
    return Scalar(int(re.p)) / int(re.q) + Scalar(0, int(im.p)) / int(im.q)


def test_step_rank_irrational_drop():
    # rank drops exactly at the roots of alpha^2 - 2, which never split over Q(i)
    a = UniPoly.x()
    m = [[a, UniPoly.const(2)], [UniPoly.const(1), a]]
    sr = param_step_rank(m, 2)
    assert sr.generic_rank == 2
    assert sr.exceptional == [(UniPoly([-2, 0, 1]), 1)]


def test_generic_rank_multivar():
    x = [MultiPoly.var(3, k) for k in range(3)]
    zero = MultiPoly.const(3, 0)
    # the antisymmetric formal matrix of sl2-like data has generic rank 2
    m = [[zero, x[0], x[1] * 2], [-x[0], zero, x[2]], [-x[1] * 2, -x[2], zero]]
    assert generic_rank_multivar(m) == 2
    assert generic_rank_multivar([[x[0], x[1]], [x[0] * x[2], x[1] * x[2]]]) == 1
