"""(alpha, beta, gamma)-derivations: operators D with
alpha D(x*y) = beta (Dx)*y + gamma x*(Dy).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import OperatorSpace, StructureConstants
from .errors import KindMismatch
from .linalg import nullspace
from .scalar import ONE, ZERO, Scalar, scalar


@dataclass(frozen=True)
class AbcTriple:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar

    @staticmethod
    def of(a, b, c) -> "AbcTriple":
        return AbcTriple(scalar(a), scalar(b), scalar(c))

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


CLASSES = ("D(δ,0,0)", "D(δ,1,-1)", "D(δ,1,0)", "D(δ,1,1)")


@dataclass(frozen=True)
class CanonicalAbc:
    cls: str
    delta: Scalar

    def triple(self) -> AbcTriple:
        tails = {"D(δ,0,0)": (0, 0), "D(δ,1,-1)": (1, -1), "D(δ,1,0)": (1, 0), "D(δ,1,1)": (1, 1)}
        b, c = tails[self.cls]
        return AbcTriple.of(self.delta, b, c)

    def __str__(self):
        b, c = {"D(δ,0,0)": ("0", "0"), "D(δ,1,-1)": ("1", "-1"),
                "D(δ,1,0)": ("1", "0"), "D(δ,1,1)": ("1", "1")}[self.cls]
        return f"D({self.delta},{b},{c})"


def canonicalize_abc(t) -> CanonicalAbc:
    a, b, c = (scalar(x) for x in t)
    if not b and not c:
        return CanonicalAbc("D(δ,0,0)", ONE if a else ZERO)
    if not (b + c):
        # D(a, b, -b) = D(0,1,-1) meet D(a,0,0) = D(a,1,-1)
        return CanonicalAbc("D(δ,1,-1)", a)
    if b != c:
        return CanonicalAbc("D(δ,1,0)", a / (b + c))
    return CanonicalAbc("D(δ,1,1)", a / b)


# ---------------------------------------------------------------------------
# linear systems


def derivation_template(sc: StructureConstants):
    """Rows of the defining system as {unknown: (coef_alpha, coef_beta, coef_gamma)}.

    One row per ordered pair (i, j) and output coordinate s; the unknown
    D[r][s] sits at column r*n + s."""
    cached = getattr(sc, "_der_template", None)
    if cached is not None:
        return cached
    n = sc.dim
    c = sc.c
    rows = []
    for i in range(n):
        for j in range(n):
            for s in range(n):
                row: dict = {}

                def add(col, slot, v):
                    cur = row.get(col)
                    if cur is None:
                        cur = [ZERO, ZERO, ZERO]
                        row[col] = cur
                    cur[slot] = cur[slot] + v

                for k, v in sc.prod[i][j].items():
                    add(s * n + k, 0, v)
                for r in range(n):
                    v = c[r][j][s]
                    if v:
                        add(r * n + i, 1, -v)
                    v = c[i][r][s]
                    if v:
                        add(r * n + j, 2, -v)
                row = {k: tuple(v) for k, v in row.items() if any(v)}
                if row:
                    rows.append(row)
    sc._der_template = rows
    return rows


def instantiate(template, values):
    """Evaluate template rows at parameter values (Scalars or polynomials)."""
    out = []
    for row in template:
        r = {}
        for col, coefs in row.items():
            acc = None
            for cf, val in zip(coefs, values):
                if not cf or not val:
                    continue
                term = val * cf
                acc = term if acc is None else acc + term
            if acc is not None and acc:
                r[col] = acc
        if r:
            out.append(r)
    return out


def derivation_system(sc, triples):
    tmpl = derivation_template(sc)
    rows = []
    for t in triples:
        vals = tuple(x if not isinstance(x, (int, str)) else scalar(x) for x in t)
        rows.extend(instantiate(tmpl, vals))
    return rows


def derivation_space(sc: StructureConstants, triples) -> OperatorSpace:
    if isinstance(triples, AbcTriple) or (triples and not isinstance(triples[0], (tuple, list, AbcTriple))):
        triples = [triples]
    n = sc.dim
    rows = derivation_system(sc, [tuple(scalar(x) for x in t) for t in triples])
    _, basis = nullspace(rows, n * n)
    return OperatorSpace.from_vectors(n, basis)


def derivation_dim(sc, triples) -> int:
    return derivation_space(sc, triples).dim


NAMED = {
    "der": [(1, 1, 1)],
    "D011": [(0, 1, 1)],
    "centroid": [(1, 1, 0)],
    "D100": [(1, 0, 0)],
    "D010": [(0, 1, 0)],
    "D11-1": [(1, 1, -1)],
    "quasicentroid": [(0, 1, -1)],
    "der_cap_D011": [(1, 1, 1), (0, 1, 1)],
    "D100_cap_D010": [(1, 0, 0), (0, 1, 0)],
}


def named_spaces(sc: StructureConstants) -> dict:
    if sc.kind != "lie":
        raise KindMismatch("named associated spaces are defined here for Lie algebras")
    return {name: derivation_space(sc, ts) for name, ts in NAMED.items()}
