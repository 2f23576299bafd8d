import random

import pytest
from hypothesis import given, settings, strategies as st

from lieinv.catalog import catalog_get, find
from lieinv.derivations import derivation_dim
from lieinv.errors import KindMismatch
from lieinv.functions import (InvariantFunction, brute_force_value, evaluate,
                              function_from_points, invariant_function, leq, render_table,
                              signature)
from lieinv.invariants import center, series
from lieinv.scalar import Scalar
from lieinv.unipoly import UniPoly, field_roots
from oracle import computed_points, expected_points, params_sympy, reference_tables
from support import SEED, catalog_instances, random_basis_changes, random_points

TABLES = reference_tables()
LIE = catalog_instances("lie")
JORDAN = catalog_instances("jordan")
ALL = LIE + JORDAN


def table_cases():
    """(label, params) pairs checked against the stored tables."""
    out = []
    for label in TABLES:
        e = find(label)
        if not e.params:
            out.append((label, None))
        elif label == "g_{3,4}":
            out += [(label, {"a": a}) for a in (2, 3, "i")]
        else:
            out.append((label, e.sample or {"a": 2}))
    return out


CASES = table_cases()


@pytest.mark.parametrize("label,params", CASES, ids=[f"{l}{p or ''}" for l, p in CASES])
def test_reference_tables(label, params):
    sc = catalog_get(label, params)
    subs = params_sympy(params)
    for which, table in TABLES[label].items():
        f = invariant_function(sc, which)
        assert f.generic == table["generic"], which
        assert computed_points(f) == expected_points(table, subs) or \
            _same(expected_points(table, subs), computed_points(f)), (which, str(f))


def _same(a, b):
    from oracle import same_points
    return same_points(a, b)


def _check_points(sc, which, f, points):
    for t in points:
        assert evaluate(f, t) == brute_force_value(sc, which, t), (which, t)


@pytest.mark.parametrize("label,sc", ALL, ids=[l for l, _ in ALL])
def test_psi_agrees_with_brute_force(label, sc):
    pts = random_points(20, SEED + sc.dim)
    for which in ("psi", "psi0"):
        f = invariant_function(sc, which)
        exceptional = [r for fac, _ in f.exceptional for r in field_roots(fac)]
        _check_points(sc, which, f, pts + exceptional)


@pytest.mark.parametrize("label,sc", LIE, ids=[l for l, _ in LIE])
def test_phi_agrees_with_brute_force(label, sc):
    pts = random_points(6, SEED + 17)
    for which in ("phi", "phi0"):
        f = invariant_function(sc, which)
        exceptional = [r for fac, _ in f.exceptional for r in field_roots(fac)]
        _check_points(sc, which, f, pts + exceptional)


@settings(max_examples=25)
@given(st.sampled_from(ALL), st.integers(0, 10 ** 6))
def test_basis_change_invariance(item, seed):
    label, sc = item
    other = next(random_basis_changes(sc, 1, seed))
    whichs = ("psi", "psi0") if sc.kind == "jordan" else ("psi", "psi0", "phi", "phi0")
    for w in whichs:
        assert invariant_function(other, w) == invariant_function(sc, w), (label, w)


@pytest.mark.parametrize("label,sc", LIE, ids=[l for l, _ in LIE])
def test_inequality_chain(label, sc):
    n = sc.dim
    d = series(sc).d
    derived = d[1] if len(d) > 1 else n
    bound = (n - derived) * len(center(sc))
    upper = derivation_dim(sc, [(0, 1, -1)])
    psi, psi0 = invariant_function(sc, "psi"), invariant_function(sc, "psi0")
    for t in random_points(8, SEED + 3) + [Scalar(0), Scalar(1), Scalar(-1), Scalar(2)]:
        assert bound <= evaluate(psi0, t) <= upper
        assert evaluate(psi0, t) <= evaluate(psi, 2 * t)
        assert bound <= evaluate(psi, t)


def test_inequality_example():
    sc = catalog_get("(g-9)")
    assert derivation_dim(sc, [(0, 1, -1)]) == 5
    assert (4 - series(sc).d[1]) * len(center(sc)) == 1


def test_values_rise_above_generic():
    for label, sc in ALL:
        for w in ("psi", "psi0") if sc.kind == "jordan" else ("psi", "psi0", "phi", "phi0"):
            f = invariant_function(sc, w)
            assert all(v > f.generic for _, v in f.exceptional), (label, w)


def test_signatures():
    assert str(signature(invariant_function(catalog_get("(g-18)", {"a": 3}), "psi"))) == "6_1, 5_6, 4"
    assert str(signature(invariant_function(catalog_get("g_{4,2}", {"a": 2}), "psi"))) == "6_1, 5_2, 4"
    const = InvariantFunction(5)
    assert signature(const).counts == {} and str(signature(const)) == "5"
    # degree of an irrational factor counts every root
    f = function_from_points(3, [(UniPoly.parse("α^2-2"), 4)])
    assert signature(f).counts == {4: 2}


def test_evaluate_and_examples():
    psi = invariant_function(catalog_get("g_{3,4}", {"a": 2}), "psi")
    assert psi == function_from_points(3, {"1": 4, "2": 4, "1/2": 4})
    assert evaluate(psi, 1) == 4 and evaluate(psi, 7) == 3
    phi = invariant_function(catalog_get("(g-9)"), "phi")
    assert [evaluate(phi, t) for t in ("1", "0", "-1", "1/2", "5")] == [12, 12, 14, 10, 9]
    assert invariant_function(catalog_get("j_{1,1}"), "psi") == function_from_points(0, {"2": 1})


def test_leq():
    g32 = invariant_function(catalog_get("g_{3,2}"), "psi")
    g21 = invariant_function(catalog_get("g_{2,1}+g_1"), "psi")
    sl2 = invariant_function(catalog_get("sl_2"), "psi")
    assert leq(g32, g21)
    c = leq(sl2, g21)
    assert not c and c.witness == UniPoly.linear_root(Scalar(-1)) and (c.left, c.right) == (5, 4)
    assert c.witness_text() == "-1: 5 > 4"
    assert leq(sl2, sl2)
    assert not leq(function_from_points(4, {}), function_from_points(3, {"1": 9}))


def test_equality_is_refinement_invariant():
    f = function_from_points(1, [(UniPoly.parse("(α-1)*(α-2)"), 3)])
    g = function_from_points(1, {"1": 3, "2": 3})
    assert f == g
    assert f != function_from_points(1, {"1": 3, "2": 4})


def test_render_table():
    psi = invariant_function(catalog_get("g_{3,4}", {"a": 2}), "psi")
    assert render_table(psi, "ψ") == "α | 2 | 1 | 1/2 |\nψ | 4 | 4 | 4   | 3"
    f = function_from_points(0, [(UniPoly.parse("α^2-2"), 1), (UniPoly.parse("α^2+1"), 2)])
    text = render_table(f)
    head = text.splitlines()[0]
    assert "| i |" in head and "| -i |" in head and "roots of α^2-2 ≈ -1.414213562, 1.414213562" in head


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        invariant_function(catalog_get("j_{2,1}"), "phi")
