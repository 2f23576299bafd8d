import pytest

from lieinv.catalog import ENTRIES, catalog_get, find, four_dim_cases, jordan_entries, three_dim_entries
from lieinv.classify import identify, identify3, identify4
from lieinv.errors import KindMismatch, NoMatch
from lieinv.scalar import Scalar
from support import SEED, random_basis_changes

FOUR = [(e.label, e.sample) for e in four_dim_cases()]


def _member(result, params):
    want = {k: Scalar.coerce(Scalar.parse(str(v))) for k, v in params.items()}
    return any(all(m[k] == want[k] for k in want) for m in result.orbit)


@pytest.mark.parametrize("label,params", FOUR, ids=[l for l, _ in FOUR])
def test_four_dim_round_trip(label, params):
    sc = catalog_get(label, params)
    for other in [sc] + list(random_basis_changes(sc, 2, SEED)):
        r = identify4(other)
        assert r.label == label
        if params:
            assert _member(r, params), str(r)


@pytest.mark.parametrize("label,params,orbit", [
    ("(g-17)", {"a": 3, "b": 5}, 6),
    ("(g-18)", {"a": 3}, 6),
    ("(g-19)", {"a": 2}, 2),
    ("(g-21)", {"a": 3}, 2),
    ("(g-28)", {"a": 3}, 2),
    ("(g-8)", {"a": 3}, 2),
    ("(g-11)", {"a": 5}, 1),
    ("(g-20)", {"a": -3}, 1),
])
def test_orbits(label, params, orbit):
    r = identify(catalog_get(label, params))
    assert len(r.orbit) == orbit and _member(r, params)
    # every orbit member names an isomorphic algebra
    for m in r.orbit:
        assert identify(catalog_get(label, m)).orbit == r.orbit


def test_orbit_text():
    r = identify(catalog_get("(g-19)", {"a": 2}))
    assert str(r) == "g_{4,5}(a,a^2), a ∈ {1/2, 2}"
    assert r.to_json()["text"] == str(r)


def test_scrambled_examples():
    for label, name in (("scrambled-1", "g_{4,2}(a), a = 2"), ("scrambled-2", "g_{2,1}⊕g_{2,1}")):
        sc = catalog_get(label)
        assert str(identify(sc)) == name
        for other in random_basis_changes(sc, 2, SEED + 1):
            assert str(identify(other)) == name


@pytest.mark.parametrize("entry", three_dim_entries(), ids=lambda e: e.label)
def test_three_dim(entry):
    params = {"a": 2} if entry.params else None
    sc = catalog_get(entry.label, params)
    for other in [sc] + list(random_basis_changes(sc, 2, SEED)):
        r = identify3(other)
        assert r.label == entry.label
        if params:
            assert [m["a"] for m in r.orbit] == [Scalar(1) / 2, Scalar(2)]


def test_three_dim_gaussian_parameter():
    r = identify(catalog_get("g_{3,4}", {"a": "i"}))
    assert [str(m["a"]) for m in r.orbit] == ["-i", "i"]


@pytest.mark.parametrize("entry", jordan_entries(), ids=lambda e: e.label)
def test_jordan(entry):
    sc = catalog_get(entry.label)
    for other in [sc] + list(random_basis_changes(sc, 2, SEED)):
        assert identify(other).label == entry.label


def test_errors():
    with pytest.raises(KindMismatch):
        identify3(catalog_get("(g-1)"))
    with pytest.raises(KindMismatch):
        identify4(catalog_get("j_{2,1}"))
    with pytest.raises(NoMatch):
        identify(catalog_get("ind-1a"))
    with pytest.raises(NoMatch):
        identify(catalog_get("g_{2,1}"))


def test_catalog_covers_all_cases():
    assert [e.label for e in four_dim_cases()] == [f"(g-{k})" for k in range(1, 35)]
    assert len({e.label for e in ENTRIES}) == len(ENTRIES)
    assert find("g_{3,4}").params == ("a",)
