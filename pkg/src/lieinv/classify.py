"""Identification of 3- and 4-dimensional complex Lie algebras and of
Jordan algebras of dimension at most 2 from their invariant functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .algebra import StructureConstants
from .catalog import find, four_dim_cases, jordan_entries, three_dim_entries
from .errors import AmbiguousSignature, InadmissibleParameter, KindMismatch, NoMatch
from .functions import InvariantFunction, invariant_function
from .scalar import Scalar
from .unipoly import UniPoly, field_roots


@dataclass
class IdentificationResult:
    label: str
    name: str
    params: dict | None = None
    orbit: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    note: str = ""

    def __str__(self):
        if not self.orbit:
            return self.name + (f" ({self.note})" if self.note else "")
        keys = list(self.orbit[0])
        if len(self.orbit) == 1:
            return self.name + ", " + ", ".join(f"{k} = {self.orbit[0][k]}" for k in keys)
        if len(keys) == 1:
            k = keys[0]
            return f"{self.name}, {k} ∈ {{{', '.join(str(m[k]) for m in self.orbit)}}}"
        members = ", ".join("(" + ",".join(str(m[k]) for k in keys) + ")" for m in self.orbit)
        return f"{self.name}, ({','.join(keys)}) ∈ {{{members}}}"

    def to_json(self):
        return {"label": self.label, "name": self.name,
                "params": {k: str(v) for k, v in self.params.items()} if self.params else None,
                "orbit": [{k: str(v) for k, v in m.items()} for m in self.orbit],
                "evidence": self.evidence, "note": self.note, "text": str(self)}


@lru_cache(maxsize=None)
def _entry_function(label: str, which: str, key=None) -> InvariantFunction:
    e = find(label)
    params = dict(key) if key else None
    return invariant_function(e.instantiate(params), which)


def _funcs(sc, whichs):
    return {w: invariant_function(sc, w) for w in whichs}


def _points_with_value(f: InvariantFunction, value):
    """Rational points where f takes ``value`` plus any irrational factor."""
    pts, rest = [], []
    for fac, v in f.exceptional:
        if v != value:
            continue
        roots = field_roots(fac)
        pts.extend(roots)
        left = fac
        for r in roots:
            left = left // UniPoly.linear_root(r)
        if not left.is_constant():
            rest.append(left.monic())
    return pts, rest


def _uniq(values):
    out = []
    for v in values:
        if v not in out:
            out.append(v)
    return sorted(out, key=lambda s: s.sort_key())


# ---------------------------------------------------------------------------
# dimension 3


def identify3(sc: StructureConstants) -> IdentificationResult:
    if sc.kind != "lie" or sc.dim != 3:
        raise KindMismatch("identify3 expects a 3-dimensional Lie algebra")
    psi = invariant_function(sc, "psi")
    ev = {"psi": psi.to_json()}
    for e in three_dim_entries():
        if e.params:
            continue
        if _entry_function(e.label, "psi") == psi:
            return IdentificationResult(e.label, e.name, evidence=ev)
    # g_{3,4}(a): value 4 at 1, a, 1/a and generic 3
    if psi.generic == 3 and str(psi.signature()) == "4_3, 3":
        fam = find("g_{3,4}")
        pts, rest = _points_with_value(psi, 4)
        cands = [p for p in pts if p != 1]
        for a in cands:
            try:
                ok = _entry_function(fam.label, "psi", (("a", a),)) == psi
            except InadmissibleParameter:
                continue
            if ok:
                orbit = [{"a": x} for x in _uniq([a, 1 / a])]
                return IdentificationResult(fam.label, fam.name, orbit[0], orbit, ev)
        if rest:
            return IdentificationResult(fam.label, fam.name, None, [], ev,
                                        f"a is a root of {rest[0]}")
    raise NoMatch("no 3-dimensional Lie algebra has this ψ")


# ---------------------------------------------------------------------------
# dimension 4


def _orbit(case, p):
    a = p.get("a")
    b = p.get("b")
    one = Scalar(1)
    if case == "(g-8)" or case == "(g-19)" or case == "(g-28)":
        vals = [a, one / a]
    elif case == "(g-11)" or case == "(g-20)":
        vals = [a]
    elif case == "(g-18)":
        vals = [a, one / a, -a / (1 + a), -1 - one / a, -1 - a, -one / (1 + a)]
    elif case == "(g-21)":
        vals = [a, -a]
    elif case == "(g-17)":
        pairs = [(a, b), (b, a), (one / a, b / a), (b / a, one / a), (one / b, a / b), (a / b, one / b)]
        out = []
        for x, y in pairs:
            if (x, y) not in out:
                out.append((x, y))
        out.sort(key=lambda t: (t[0].sort_key(), t[1].sort_key()))
        return [{"a": x, "b": y} for x, y in out]
    else:
        return [p]
    return [{"a": x} for x in _uniq(vals)]


def _candidates(case, f):
    psi, phi = f["psi"], f["phi"]
    one = Scalar(1)
    if case == "(g-8)":
        return [{"a": z} for z in _points_with_value(psi, 6)[0] if z != 1]
    if case == "(g-11)":
        zs = _points_with_value(phi, 13)[0]
        out = []
        for z1, z2 in permutations(zs, 2):
            if z2 and z1 - 1 == 2 / z2:
                out.append({"a": z1 - 1})
        return out + [{"a": z - 1} for z in zs]
    if case == "(g-17)":
        zs = _points_with_value(phi, 13)[0]
        out = []
        for z1, z2, z3 in permutations(zs, 3):
            if z2 + 1:
                out.append({"a": (z3 + 1) / (z2 + 1), "b": (z2 * z3 - 1) / (z2 + 1)})
        return out
    if case == "(g-18)":
        return [{"a": z} for z in _points_with_value(psi, 5)[0]]
    if case == "(g-19)":
        return [{"a": z} for z in _points_with_value(psi, 6)[0] if z != 1]
    if case == "(g-20)":
        return [{"a": z - 1} for z in _points_with_value(phi, 15)[0]]
    if case == "(g-21)":
        return [{"a": z + 1} for z in _points_with_value(phi, 13)[0]]
    if case == "(g-28)":
        return [{"a": z} for z in _points_with_value(psi, 4)[0] if z != 2]
    return []


def identify4(sc: StructureConstants) -> IdentificationResult:
    if sc.kind != "lie" or sc.dim != 4:
        raise KindMismatch("identify4 expects a 4-dimensional Lie algebra")
    f = _funcs(sc, ("psi", "phi"))
    sig_psi, sig_phi = str(f["psi"].signature()), str(f["phi"].signature())
    ev = {"psi_signature": sig_psi, "phi_signature": sig_phi}
    matches = [e for e in four_dim_cases() if e.psi_sig == sig_psi and e.phi_sig == sig_phi]
    if not matches:
        raise NoMatch(f"no 4-dimensional case has signatures ψ {sig_psi}; φ {sig_phi}")
    if len(matches) > 1:
        raise AmbiguousSignature("signatures shared by " + ", ".join(e.label for e in matches))
    e = matches[0]
    if not e.params:
        for w in ("psi", "phi"):
            if _entry_function(e.label, w) != f[w]:
                raise NoMatch(f"signatures match {e.label} but the exceptional points of {w} differ")
        return IdentificationResult(e.label, e.name, evidence=ev)
    for cand in _candidates(e.label, f):
        key = tuple(sorted(cand.items()))
        try:
            ok = all(_entry_function(e.label, w, key) == f[w] for w in ("psi", "phi"))
        except (InadmissibleParameter, ZeroDivisionError):
            continue
        if ok:
            orbit = _orbit(e.label, cand)
            return IdentificationResult(e.label, e.name, orbit[0], orbit, ev)
    return IdentificationResult(e.label, e.name, None, [], ev,
                                "parameter not recoverable over Q(i)")


# ---------------------------------------------------------------------------
# Jordan algebras


def identify_jordan2(sc: StructureConstants) -> IdentificationResult:
    if sc.kind != "jordan" or sc.dim > 2:
        raise KindMismatch("identify_jordan2 expects a Jordan algebra of dimension 1 or 2")
    psi = invariant_function(sc, "psi")
    for e in jordan_entries(sc.dim):
        if _entry_function(e.label, "psi") == psi:
            return IdentificationResult(e.label, e.name, evidence={"psi": psi.to_json()})
    raise NoMatch("no Jordan algebra of this dimension has this ψ")


def identify(sc: StructureConstants) -> IdentificationResult:
    if sc.kind == "jordan":
        return identify_jordan2(sc)
    if sc.dim == 3:
        return identify3(sc)
    if sc.dim == 4:
        return identify4(sc)
    raise NoMatch(f"identification covers Lie algebras of dimension 3 and 4, got {sc.dim}")
