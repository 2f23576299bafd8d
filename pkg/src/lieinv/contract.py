"""Contractions: necessary criteria from the invariant functions, the
complete decision procedures in dimension 3 (Lie) and 2 (Jordan), graded
contractions and one-parameter limits."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import StructureConstants, validate
from .classify import identify
from .errors import (DimMismatch, DivergentEntry, EpsilonNotSymmetric, GradingNotClosed,
                     JacobiFails, KindMismatch, LieInvError, ParseError, SingularU)
from .exprs import evaluate
from .functions import evaluate as fvalue
from .functions import invariant_function, leq
from .scalar import I, ZERO, Scalar, scalar
from .unipoly import UniPoly, poly_gcd

# ---------------------------------------------------------------------------
# criteria and verdicts


@dataclass
class Criterion:
    passed: bool
    witness: str = ""

    def to_json(self):
        return {"passed": self.passed, "witness": self.witness}


@dataclass
class ContractionVerdict:
    source: str
    target: str
    criteria: dict
    decision: str  # Exists | Trivial | Excluded | NotExcluded
    listed: bool | None = None  # membership in the known list, when checked
    notes: list = field(default_factory=list)

    @property
    def agrees(self):
        if self.listed is None:
            return True
        return self.listed == (self.decision == "Exists")

    def failed(self):
        return [k for k, c in self.criteria.items() if not c.passed]

    def __str__(self):
        lines = [f"{self.source} -> {self.target}: {self.decision}"]
        for k, c in self.criteria.items():
            lines.append(f"  {k}: {'pass' if c.passed else 'fail'}" + (f" ({c.witness})" if c.witness else ""))
        for n in self.notes:
            lines.append("  " + n)
        return "\n".join(lines)

    def to_json(self):
        return {"source": self.source, "target": self.target, "decision": self.decision,
                "criteria": {k: c.to_json() for k, c in self.criteria.items()},
                "listed": self.listed, "notes": self.notes}


def _check_pair(l, l0):
    if l.dim != l0.dim:
        raise DimMismatch(f"dimensions differ: {l.dim} vs {l0.dim}")
    if l.kind != l0.kind:
        raise KindMismatch("both algebras must be of the same kind")


def _leq_criterion(f, g):
    cmp = leq(f, g)
    return Criterion(cmp.holds, "" if cmp.holds else f"α = {cmp.witness_text()}")


def contraction_criteria(l: StructureConstants, l0: StructureConstants) -> ContractionVerdict:
    _check_pair(l, l0)
    psi, psi0 = invariant_function(l, "psi"), invariant_function(l0, "psi")
    crit = {"psi_leq": _leq_criterion(psi, psi0)}
    a, b = fvalue(psi, 1), fvalue(psi0, 1)
    crit["psi1_strict"] = Criterion(a < b, "" if a < b else f"ψ(1) = {a} is not below {b}")
    if l.kind == "lie":
        for w in ("phi", "phi0"):
            crit[f"{w}_leq"] = _leq_criterion(invariant_function(l, w), invariant_function(l0, w))
    decision = "NotExcluded" if all(c.passed for c in crit.values()) else "Excluded"
    return ContractionVerdict(l.name or "L", l0.name or "L0", crit, decision)


# Known non-trivial contractions as (source, target) catalog labels; the
# family label g_{3,4} stands for every admissible a.
LIE3_CONTRACTIONS = frozenset({
    ("sl_2", "g_{3,4}(-1)"),
    ("g_{3,2}", "g_{3,3}"),
    ("g_{3,2}", "g_{3,1}"),
    ("g_{3,4}", "g_{3,1}"),
    ("g_{3,4}(-1)", "g_{3,1}"),
    ("g_{2,1}+g_1", "g_{3,1}"),
    ("sl_2", "g_{3,1}"),
})

JORDAN2_CONTRACTIONS = frozenset({
    ("j_{2,5}", "j_{2,1}"),
    ("j_{2,5}", "j_{2,2}"),
    ("j_{2,1}", "j_{2,3}"),
    ("j_{2,2}", "j_{2,3}"),
    ("j_{2,5}", "j_{2,3}"),
})


def _decide(l, l0, dim, kind, known):
    if l.dim != dim or l.kind != kind or l0.dim != dim or l0.kind != kind:
        raise DimMismatch(f"expected two {dim}-dimensional {kind} algebras")
    psi, psi0 = invariant_function(l, "psi"), invariant_function(l0, "psi")
    crit = {"psi_leq": _leq_criterion(psi, psi0)}
    a, b = fvalue(psi, 1), fvalue(psi0, 1)
    crit["psi1_strict"] = Criterion(a < b, "" if a < b else f"ψ(1) = {a} is not below {b}")
    ok = all(c.passed for c in crit.values())
    verdict = ContractionVerdict(l.name or "L", l0.name or "L0", crit, "Exists" if ok else "Excluded")
    if ok and l0.is_abelian():
        verdict.decision = "Trivial"
        verdict.notes.append("the target is abelian; such a contraction always exists")
    try:
        src, dst = identify(l), identify(l0)
    except LieInvError:
        verdict.notes.append("not cross-checked: identification failed")
        return verdict
    verdict.source, verdict.target = str(src), str(dst)
    if dst.label in {d for _, d in known} or verdict.decision != "Trivial":
        verdict.listed = (src.label, dst.label) in known
    if not verdict.agrees:
        verdict.notes.append("disagrees with the list of known contractions")
    return verdict


def decide_contraction3(l, l0) -> ContractionVerdict:
    return _decide(l, l0, 3, "lie", LIE3_CONTRACTIONS)


def decide_contraction_jordan2(j, j0) -> ContractionVerdict:
    return _decide(j, j0, 2, "jordan", JORDAN2_CONTRACTIONS)


def scan(entries, decide, workers=1):
    """All ordered pairs of distinct entries: list of (src, dst, verdict)."""
    pairs = [(s_name, s, t_name, t) for s_name, s in entries for t_name, t in entries
             if s_name != t_name]
    run = lambda p: (p[0], p[2], decide(p[1], p[3]))  # noqa: E731
    if workers <= 1:
        return [run(p) for p in pairs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, pairs))


def scan3(samples=(2, -1), workers=1):
    from .catalog import catalog_get, three_dim_entries
    entries = []
    for e in three_dim_entries():
        if e.params:
            for a in samples:
                if not _admissible(e, {"a": a}):
                    continue
                entries.append((e.display({"a": scalar(a)}), e.instantiate({"a": a})))
        else:
            entries.append((e.name, catalog_get(e.label)))
    return scan(entries, decide_contraction3, workers)


def _admissible(e, params):
    try:
        e.instantiate(params)
        return True
    except LieInvError:
        return False


def scan_jordan2(workers=1):
    from .catalog import jordan_entries
    entries = [(e.name, e.instantiate()) for e in jordan_entries(2)]
    return scan(entries, decide_contraction_jordan2, workers)


def format_scan(rows) -> str:
    names = []
    for s, t, _ in rows:
        for x in (s, t):
            if x not in names:
                names.append(x)
    exists = {(s, t) for s, t, v in rows if v.decision == "Exists"}
    lines = [f"{s} -> {t}" for s, t in sorted(exists, key=lambda p: (names.index(p[0]), names.index(p[1])))]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graded contractions


@dataclass
class GradedSetup:
    group: tuple  # (m1, m2)
    grades: list  # group element (a, b) of each basis vector
    epsilon: list  # symmetric matrix indexed by group elements, a*m2 + b

    @staticmethod
    def from_json(data, sc: StructureConstants = None) -> "GradedSetup":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            group = tuple(int(x) for x in data["group"])
            if len(group) == 1:
                group = (group[0], 1)
            grades = data["grades"]
            if isinstance(grades, dict):
                if sc is None:
                    raise ParseError("grades given by label need the algebra")
                grades = [grades[lab] for lab in sc.labels]
            grades = [tuple(g) if isinstance(g, (list, tuple)) else (int(g), 0) for g in grades]
            eps = [[scalar(Scalar.parse(str(x))) for x in row] for row in data["epsilon"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed graded setup: {exc}") from None
        return GradedSetup(group, grades, eps)

    def index(self, g):
        m1, m2 = self.group
        return (g[0] % m1) * m2 + (g[1] % m2)

    def add(self, g, h):
        m1, m2 = self.group
        return ((g[0] + h[0]) % m1, (g[1] + h[1]) % m2)


def pauli_setup(label: str, params=None, support=False) -> GradedSetup:
    """Z3 x Z3 setup of a stored 8x8 epsilon matrix. The identity component
    carries no basis vector, so its row and column stay zero. With
    ``support`` every nonzero entry is replaced by 1."""
    from .catalog import GRADED_BASIS, graded_epsilon, graded_grade
    small = graded_epsilon(label, params)
    grades = [graded_grade(lab) for lab in GRADED_BASIS]
    setup = GradedSetup((3, 3), grades, [[ZERO] * 9 for _ in range(9)])
    for r, g in enumerate(grades):
        for c, h in enumerate(grades):
            v = small[r][c]
            setup.epsilon[setup.index(g)][setup.index(h)] = (Scalar(1) if v else ZERO) if support else v
    return setup


def graded_apply(sc: StructureConstants, setup: GradedSetup) -> StructureConstants:
    n = sc.dim
    size = setup.group[0] * setup.group[1]
    eps = setup.epsilon
    if len(eps) != size or any(len(r) != size for r in eps):
        raise ParseError(f"epsilon must be a {size}x{size} matrix")
    for a in range(size):
        for b in range(size):
            if eps[a][b] != eps[b][a]:
                raise EpsilonNotSymmetric(f"epsilon[{a}][{b}] != epsilon[{b}][{a}]")
    if len(setup.grades) != n:
        raise ParseError("one grade per basis vector is required")
    grades = setup.grades
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            target = setup.index(setup.add(grades[i], grades[j]))
            f = eps[setup.index(grades[i])][setup.index(grades[j])]
            for k, v in sc.prod[i][j].items():
                if setup.index(grades[k]) != target:
                    raise GradingNotClosed(sc.labels[i], sc.labels[j])
                c[i][j][k] = v * f
    out = StructureConstants(c, sc.kind, sc.labels, (sc.name or "L") + "_ε")
    rep = validate(out)
    if not rep.ok:
        kind, idx = rep.violations[0]
        i, j, k = (grades[x - 1] for x in idx[:3])
        raise JacobiFails(i, j, k)
    return out


# ---------------------------------------------------------------------------
# limits


class RatFunc:
    """Quotient num/den of polynomials in eps, den monic, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = UniPoly.coerce(num)
        den = UniPoly.const(1) if den is None else UniPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, UniPoly.const(1)
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lc = den.lc()
        self.num, self.den = num.scale(lc.inverse()), den.monic()

    def __add__(self, o):
        o = _rf(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-_rf(o))

    def __rsub__(self, o):
        return _rf(o) - self

    def __mul__(self, o):
        o = _rf(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        return self * _rf(o).inverse()

    def __rtruediv__(self, o):
        return _rf(o) * self.inverse()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, o):
        o = _rf(o)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def limit0(self):
        """Value at eps -> 0, or None when the entry diverges."""
        if self.num.is_zero():
            return ZERO
        on, vn = _order(self.num)
        od, vd = _order(self.den)
        if on > od:
            return ZERO
        if on < od:
            return None
        return vn / vd

    def __str__(self):
        from .unipoly import format_poly
        n = format_poly(self.num, "ε")
        if self.den == UniPoly.const(1):
            return n
        return f"({n})/({format_poly(self.den, 'ε')})"


def _order(p: UniPoly):
    for k, c in enumerate(p.coeffs):
        if c:
            return k, c
    raise ValueError("zero polynomial")


def _rf(x):
    if isinstance(x, RatFunc):
        return x
    return RatFunc(UniPoly.coerce(x))


def parse_ratfunc(text) -> RatFunc:
    eps = RatFunc(UniPoly.x())
    names = {"ε": eps, "eps": eps, "i": RatFunc(UniPoly.const(I)),
             "__int__": lambda k: RatFunc(UniPoly.const(k))}
    val = evaluate(str(text), names)
    return _rf(val)


def _rf_inverse(u):
    n = len(u)
    a = [list(row) + [RatFunc(UniPoly.const(1 if i == j else 0)) for j in range(n)]
         for i, row in enumerate(u)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularU("U(ε) is singular over the rational functions")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def limit_contraction(sc: StructureConstants, u) -> StructureConstants:
    """Structure constants of lim U(ε)^-1 (U(ε)x · U(ε)y); columns of U are
    the images of the basis vectors."""
    n = sc.dim
    if len(u) != n or any(len(r) != n for r in u):
        raise DimMismatch(f"U must be {n}x{n}")
    U = [[x if isinstance(x, RatFunc) else parse_ratfunc(x) for x in row] for row in u]
    Uinv = _rf_inverse(U)
    zero = RatFunc(UniPoly.const(0))
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            # product of f_a and f_b in the old basis
            prod = [zero] * n
            for i in range(n):
                if not U[i][a]:
                    continue
                for j in range(n):
                    if not U[j][b]:
                        continue
                    w = U[i][a] * U[j][b]
                    for k, v in sc.prod[i][j].items():
                        prod[k] = prod[k] + w * RatFunc(UniPoly.const(v))
            for l in range(n):
                acc = zero
                for k in range(n):
                    if prod[k] and Uinv[l][k]:
                        acc = acc + Uinv[l][k] * prod[k]
                lim = acc.limit0()
                if lim is None:
                    raise DivergentEntry(a + 1, b + 1, l + 1)
                c[a][b][l] = lim
    out = StructureConstants(c, sc.kind, sc.labels, (sc.name or "L") + "_0")
    rep = validate(out)
    if not rep.ok:
        raise LieInvError(f"limit violates the {sc.kind} laws: {rep.violations[0]}")
    return out


__all__ = ["ContractionVerdict", "Criterion", "GradedSetup", "JORDAN2_CONTRACTIONS",
           "LIE3_CONTRACTIONS", "RatFunc", "contraction_criteria", "decide_contraction3",
           "decide_contraction_jordan2", "format_scan", "graded_apply", "limit_contraction",
           "parse_ratfunc", "pauli_setup", "scan3", "scan_jordan2"]
