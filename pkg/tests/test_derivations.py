import random

import pytest
import sympy as sp

from lieinv.algebra import OperatorSpace, change_basis, matmul, mat_inverse, operator_space_algebra
from lieinv.catalog import catalog_get
from lieinv.derivations import (AbcTriple, CanonicalAbc, canonicalize_abc, derivation_space,
                                named_spaces)
from lieinv.errors import KindMismatch
from lieinv.invariants import center, derived_algebra
from lieinv.linalg import rank
from lieinv.scalar import Scalar
from oracle import to_sympy
from support import SEED, catalog_instances, random_invertible, small_scalar

LIE = [x for x in catalog_instances("lie")]


def sympy_derivation_dim(sc, triples):
    """Nullity of alpha D(xy) - beta D(x)y - gamma x D(y) built symbolically."""
    n = sc.dim
    D = sp.Matrix(n, n, lambda r, s: sp.Symbol(f"d{r}_{s}"))
    C = [[[to_sympy(sc.c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]

    def prod(u, v):
        return sp.Matrix([sum(u[i] * v[j] * C[i][j][k] for i in range(n) for j in range(n))
                          for k in range(n)])

    eqs = []
    basis = [sp.Matrix([1 if k == i else 0 for k in range(n)]) for i in range(n)]
    for a, b, g in triples:
        a, b, g = (to_sympy(Scalar.coerce(x)) for x in (a, b, g))
        for i in range(n):
            for j in range(n):
                expr = a * D * prod(basis[i], basis[j]) - b * prod(D * basis[i], basis[j]) \
                    - g * prod(basis[i], D * basis[j])
                eqs.extend(expr)
    A, _ = sp.linear_eq_to_matrix(eqs, list(D))
    return n * n - A.rank()


@pytest.mark.parametrize("label", ["g_{3,2}", "sl_2", "(g-11)", "(g-17)", "(g-25)", "j_{2,5}"])
def test_dims_match_symbolic_oracle(label):
    from lieinv.catalog import find
    e = find(label)
    sc = e.instantiate(e.sample or None)
    rng = random.Random(SEED)
    triples = [(1, 1, 1), (0, 1, 1), (1, 1, 0), (1, 1, -1), (0, 1, -1), (2, 1, 1)]
    triples += [tuple(small_scalar(rng) for _ in range(3)) for _ in range(3)]
    for t in triples:
        assert derivation_space(sc, [t]).dim == sympy_derivation_dim(sc, [t]), (label, t)


def test_table_dimensions_g32():
    sc = catalog_get("g_{3,2}")
    dims = [derivation_space(sc, ts).dim for ts in
            ([(1, 1, 1)], [(0, 1, 1)], [(1, 1, 0)], [(1, 1, 1), (0, 1, 1)], [(1, 1, -1)], [(0, 1, -1)])]
    assert dims == [4, 3, 1, 2, 0, 1]


def test_g42_derivations_and_named_examples():
    assert derivation_space(catalog_get("g_{4,2}", {"a": 2}), [(1, 1, 1)]).dim == 6
    sp_ = named_spaces(catalog_get("(g-9)"))
    assert sp_["quasicentroid"].dim == 5
    l = named_spaces(catalog_get("l_{18,25}", {"a": 3}))
    assert (l["D11-1"].dim, l["quasicentroid"].dim) == (9, 18)
    with pytest.raises(KindMismatch):
        named_spaces(catalog_get("j_{2,1}"))


@pytest.mark.parametrize("t,expected", [
    ((2, 3, 3), CanonicalAbc("D(δ,1,1)", Scalar(2) / 3)),
    ((1, -1, 1), CanonicalAbc("D(δ,1,-1)", Scalar(1))),
    ((5, 0, 0), CanonicalAbc("D(δ,0,0)", Scalar(1))),
    ((4, 1, 3), CanonicalAbc("D(δ,1,0)", Scalar(1))),
])
def test_canonical_triples(t, expected):
    assert canonicalize_abc(t) == expected


def test_canonicalization_idempotent_and_space_preserving():
    rng = random.Random(SEED)
    for label, sc in LIE[:20] + [x for x in catalog_instances("jordan")]:
        for _ in range(6):
            t = AbcTriple(*(small_scalar(rng) for _ in range(3)))
            if not any(t):
                continue
            c = canonicalize_abc(t)
            assert canonicalize_abc(c.triple()) == c
            assert derivation_space(sc, [t]).dim == derivation_space(sc, [c.triple()]).dim, (label, t)


def test_scaling_and_swap_symmetry():
    rng = random.Random(SEED + 1)
    for label, sc in LIE[10:30]:
        a, b, g = (small_scalar(rng) for _ in range(3))
        eps = small_scalar(rng) or Scalar(2)
        d = derivation_space(sc, [(a, b, g)]).dim
        assert derivation_space(sc, [(eps * a, eps * b, eps * g)]).dim == d
        assert derivation_space(sc, [(a, g, b)]).dim == d


def _closed(space, product):
    if space.dim == 0:
        return True
    operator_space_algebra(space, product)  # raises NotClosed otherwise
    return True


def _composition_closed(space):
    n = space.dim_ambient
    flat = space.flat()
    for x in space.basis:
        for y in space.basis:
            xy = [v for row in matmul(x, y) for v in row]
            if rank(flat + [xy], n * n) != len(flat):
                return False
    return True


@pytest.mark.parametrize("label,sc", LIE, ids=[l for l, _ in LIE])
def test_closure_laws(label, sc):
    s = named_spaces(sc)
    assert _closed(s["der"], "commutator") and _closed(s["D011"], "commutator")
    assert _closed(s["D11-1"], "anticommutator") and _closed(s["quasicentroid"], "anticommutator")
    for k in ("centroid", "D100", "D010"):
        assert _composition_closed(s[k]), k


@pytest.mark.parametrize("label,sc", LIE, ids=[l for l, _ in LIE])
def test_dimension_formulas(label, sc):
    n = sc.dim
    codim = n - len(derived_algebra(sc))
    z = len(center(sc))
    s = named_spaces(sc)
    assert s["D100"].dim == codim * n
    assert s["D010"].dim == n * z
    assert s["D100_cap_D010"].dim == codim * z


def test_trap_containment():
    rng = random.Random(SEED + 2)
    for label, sc in LIE:
        trap = derivation_space(sc, [(1, 0, 0), (0, 1, 0)])
        n = sc.dim
        t = tuple(small_scalar(rng) for _ in range(3))
        both = derivation_space(sc, [t])
        flat = both.flat()
        for m in trap.flat():
            assert rank(flat + [m], n * n) == len(flat), label


def test_conjugation_carries_named_spaces():
    rng = random.Random(SEED + 3)
    for label, sc in LIE[::4]:
        g = random_invertible(sc.dim, rng)
        ginv = mat_inverse(g)
        moved = named_spaces(change_basis(sc, g))
        for name, space in named_spaces(sc).items():
            target = moved[name]
            assert target.dim == space.dim, (label, name)
            # operators in the new basis are g^-1 M g
            image = [[v for row in matmul(matmul(ginv, m), g) for v in row] for m in space.basis]
            flat = target.flat()
            assert rank(flat + image, sc.dim ** 2) == len(flat), (label, name)


def test_abelian_gives_everything():
    sc = catalog_get("3g_1")
    for t in [(1, 1, 1), (0, 1, -1), (5, 2, 0)]:
        assert derivation_space(sc, [t]).dim == 9
    assert isinstance(derivation_space(sc, [(1, 1, 1)]), OperatorSpace)
