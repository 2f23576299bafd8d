import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lieinv.algebra import change_basis, operator_space_algebra
from lieinv.catalog import catalog_get
from lieinv.derivations import derivation_dim, derivation_space
from lieinv.errors import KindMismatch
from lieinv.invariants import Undefined, center, chi, cpq, inv_tuple, series, tau
from lieinv.scalar import Scalar
from oracle import to_sympy
from support import SEED, catalog_instances, random_basis_changes

LIE = catalog_instances("lie")
IDS = [label for label, _ in LIE]


def sym_constants(sc):
    n = sc.dim
    return [[[to_sympy(sc.c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]


def sym_bracket(C, u, v):
    n = len(C)
    return sp.Matrix([sum(u[i] * v[j] * C[i][j][k] for i in range(n) for j in range(n))
                      for k in range(n)])


def sym_span(vectors, n):
    if not vectors:
        return []
    m = sp.Matrix.hstack(*vectors)
    return m.columnspace()


def sym_series(sc):
    C = sym_constants(sc)
    n = sc.dim
    whole = [sp.eye(n)[:, k] for k in range(n)]
    out = []
    for left_fixed in (False, True):
        cur, dims = whole, [n]
        while True:
            left = whole if left_fixed else cur
            nxt = sym_span([sym_bracket(C, u, v) for u in left for v in cur], n)
            if len(nxt) == len(cur):
                break
            dims.append(len(nxt))
            cur = nxt
            if not nxt:
                break
        out.append(dims)
    return out


def sym_ad(C, xs):
    n = len(C)
    return sp.Matrix(n, n, lambda s, j: sum(xs[k] * C[k][j][s] for k in range(n)))


def sym_chi1(sc):
    xs = sp.symbols(f"x0:{sc.dim}")
    a = sym_ad(sym_constants(sc), xs)
    t1, t2 = sp.expand(a.trace()), sp.expand((a * a).trace())
    if t1 == 0:
        return None
    p222 = sp.expand((t1 ** 2 - t2) / 2)
    if p222 == 0:
        return None
    k = sp.cancel(p222 / t1 ** 2)
    return k if k.is_number else None


@pytest.mark.parametrize("label,sc", LIE, ids=IDS)
def test_series_match_symbolic(label, sc):
    prof = series(sc)
    d, l = sym_series(sc)
    assert prof.d == d and prof.l == l
    assert prof.c[0] == len(center(sc))
    assert prof.solvable == (d[-1] == 0)
    assert prof.nilpotent == (l[-1] == 0)


@pytest.mark.parametrize("label,sc", LIE, ids=IDS)
def test_tau_matches_symbolic_rank(label, sc):
    xs = sp.symbols(f"x0:{sc.dim}")
    C = sym_constants(sc)
    m = sp.Matrix(sc.dim, sc.dim, lambda i, j: sum(C[i][j][k] * xs[k] for k in range(sc.dim)))
    assert tau(sc) == sc.dim - m.rank()


@pytest.mark.parametrize("label,sc", LIE, ids=IDS)
def test_chi1_matches_symbolic(label, sc):
    ours = chi(sc)["chi1"]
    ref = sym_chi1(sc)
    if ref is None:
        assert ours is Undefined
    else:
        assert to_sympy(ours) == ref


def test_trace_examples():
    g33 = catalog_get("g_{3,3}")
    assert chi(g33)["chi1"] == Scalar(1) / 4
    assert cpq(g33, 1, 1) == 2
    g34 = catalog_get("g_{3,4}", {"a": 2})
    assert chi(g34)["chi1"] == Scalar(2) / 9
    assert cpq(g34, 1, 1) == Scalar(9) / 5


@pytest.mark.parametrize("label", ["g_{3,1}", "(g-1)", "3g_1", "ind-1a"])
def test_trace_invariants_undefined_for_nilpotent(label):
    sc = catalog_get(label)
    assert all(v is Undefined for v in chi(sc).values())
    assert all(cpq(sc, p, q) is Undefined for p in (1, 2, 3) for q in (1, 2, 3))


def test_inv_tuple_fields():
    sc = catalog_get("(g-9)")
    t = inv_tuple(sc)
    assert t.dims() == [derivation_dim(sc, [(1, 1, 1)]), derivation_dim(sc, [(0, 1, 1)]),
                        derivation_dim(sc, [(1, 1, 0)]), derivation_dim(sc, [(1, 1, 1), (0, 1, 1)])]
    assert t.to_json()["text"] == str(t)


@pytest.mark.parametrize("label,text", [
    ("ind-1a", "(7,3,0)(7,3,0)(3,7) 3 [19,24,13,15]"),
    ("ind-1b", "(7,3,0)(7,3,0)(3,7) 3 [20,24,13,15]"),
    ("ind-2a", "(8,4,0)(8,4,2,0)(2,5,8) 2 [17,19,9,11]"),
    ("ind-2b", "(8,4,0)(8,4,2,0)(2,5,8) 2 [17,20,9,11]"),
    ("ind-3a", "(7,5,2,0)(7,5)(1) 3 [10,11,3,3]"),
    ("ind-3b", "(7,5,2,0)(7,5)(1) 3 [10,11,4,3]"),
    ("ind-4a", "(8,6,2,0)(8,6)(1) 2 [12,13,4,3]"),
    ("ind-4b", "(8,6,2,0)(8,6)(1) 2 [12,13,4,4]"),
])
def test_independence_pairs(label, text):
    assert str(inv_tuple(catalog_get(label))) == text


@pytest.mark.parametrize("label,params,text", [
    ("l_{17,7}", {"a": 3}, "(8,4,0)(8,4,2,0)(2,5,8) 2 [19,20,9,12]"),
    ("l_{17,13}", {"a": 3}, "(8,5,0)(8,5,2,0)(2,5,8) 4 [17,19,8,9]"),
])
def test_eight_dim_inv(label, params, text):
    assert str(inv_tuple(catalog_get(label, params))) == text


def test_eight_dim_dims_at_special_parameters():
    assert inv_tuple(catalog_get("l_{18,25}", {"a": 0})).dims() == [21, 23, 10, 14]
    assert inv_tuple(catalog_get("l_{18,25}", {"a": -1})).dims() == [22, 22, 10, 13]
    assert inv_tuple(catalog_get("l_{18,25}", {"a": 4})).dims() == [20, 22, 10, 13]
    assert inv_tuple(catalog_get("l_{17,13}", {"a": -1})).dims() == [19, 19, 8, 9]


def test_derivation_formulas():
    # D(1,0,0) kills [L,L], D(0,1,0) maps into the center
    for label, sc in LIE:
        dl = series(sc).d
        derived = dl[1] if len(dl) > 1 else sc.dim
        assert derivation_dim(sc, [(1, 0, 0)]) == sc.dim * (sc.dim - derived), label
        assert derivation_dim(sc, [(0, 1, 0)]) == sc.dim * len(center(sc)), label


@settings(max_examples=12)
@given(st.integers(0, len(LIE) - 1), st.integers(0, 10 ** 6))
def test_invariants_are_basis_free(k, seed):
    label, sc = LIE[k]
    other = next(random_basis_changes(sc, 1, seed))
    assert str(inv_tuple(other)) == str(inv_tuple(sc))
    assert chi(other) == chi(sc)


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        inv_tuple(catalog_get("j_{2,1}"))


@pytest.mark.parametrize("label,text", [
    ("l_{17,9}", "(11,6,0)(11,6,0)(6,11) 7 [43,67,31,31]"),
    ("l_{17,12}", "(11,4,0)(11,4,0)(7,11) 7 [57,78,50,50]"),
])
def test_operator_algebras_separate_equal_inv_tuples(label, text):
    # the two algebras share their inv tuple; the Lie algebras of operators
    # that are both derivations and (0,1,1)-derivations do not
    sc = catalog_get(label)
    assert inv_tuple(sc).dims() == [16, 19, 9, 11]
    ops = derivation_space(sc, [(1, 1, 1), (0, 1, 1)])
    assert str(inv_tuple(operator_space_algebra(ops))) == text
