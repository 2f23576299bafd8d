"""Algebras given by structure constants.

``c[i][j][k]`` is the coefficient of e_k in the product e_i * e_j.  Operators
act on column vectors: D e_j = sum_i D[i][j] e_i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    KindMismatch,
    LawViolation,
    NotClosed,
    ParameterMissing,
    ParseError,
    SingularMatrix,
    UnknownLabel,
)
from .exprs import evaluate
from .linalg import rref
from .scalar import ONE, ZERO, I, Scalar, scalar

KINDS = ("lie", "jordan", "raw")
MAX_DIM = 16


class Vec:
    """Sparse linear combination of basis vectors, used while parsing."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = {k: v for k, v in (d or {}).items() if v}

    def __add__(self, other):
        if not isinstance(other, Vec):
            if not scalar(other):
                return self
            raise ParseError("cannot add a scalar to a basis vector")
        out = dict(self.d)
        for k, v in other.d.items():
            out[k] = out.get(k, ZERO) + v
        return Vec(out)

    __radd__ = __add__

    def __neg__(self):
        return Vec({k: -v for k, v in self.d.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Vec):
            raise ParseError("product of two basis vectors in a linear combination")
        c = scalar(other)
        return Vec({k: v * c for k, v in self.d.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Vec):
            raise ParseError("division by a basis vector")
        return self * scalar(other).inverse()


@dataclass
class ValidationReport:
    kind: str
    violations: list = field(default_factory=list)  # (law, index tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


class StructureConstants:
    def __init__(self, c, kind="lie", labels=None, name=""):
        n = len(c)
        if n < 1 or n > MAX_DIM:
            raise ValueError(f"dimension must be between 1 and {MAX_DIM}")
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        self.dim = n
        self.kind = kind
        self.name = name
        self.labels = list(labels) if labels else [f"e{k + 1}" for k in range(n)]
        self.c = [[[scalar(c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
        # sparse products e_i * e_j
        self.prod = [[{k: v for k, v in enumerate(self.c[i][j]) if v} for j in range(n)]
                     for i in range(n)]

    # basic algebra -------------------------------------------------------
    def multiply(self, u, v):
        """Product of two coordinate vectors (dense lists)."""
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                f = u[i] * v[j]
                for k, x in self.prod[i][j].items():
                    out[k] = out[k] + f * x
        return out

    def _mul_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                f = a * b
                for k, x in self.prod[i][j].items():
                    y = out.get(k, ZERO) + f * x
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)
        return out

    def ad(self, i):
        """Matrix of left multiplication by e_i: column j is e_i * e_j."""
        n = self.dim
        return [[self.c[i][j][k] for j in range(n)] for k in range(n)]

    def is_abelian(self) -> bool:
        return all(not self.prod[i][j] for i in range(self.dim) for j in range(self.dim))

    def __eq__(self, other):
        return (isinstance(other, StructureConstants) and self.kind == other.kind
                and self.c == other.c)

    def __repr__(self):
        return f"StructureConstants({self.name or 'unnamed'}, dim={self.dim}, kind={self.kind})"

    def validate(self) -> ValidationReport:
        return validate(self)

    def brackets(self):
        """Non-zero products as (label, label, text) with i < j (i <= j for jordan)."""
        out = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                if self.kind == "lie" and j <= i:
                    continue
                if self.kind == "jordan" and j < i:
                    continue
                if not self.prod[i][j]:
                    continue
                out.append([self.labels[i], self.labels[j], format_combination(self.prod[i][j], self.labels)])
        return out

    def to_dict(self):
        return {"name": self.name, "dim": self.dim, "kind": self.kind,
                "basis": list(self.labels), "parameters": {}, "brackets": self.brackets()}

    def with_name(self, name):
        sc = StructureConstants(self.c, self.kind, self.labels, name)
        return sc


def format_combination(vec: dict, labels) -> str:
    parts = []
    for k in sorted(vec):
        v = vec[k]
        if v.is_one():
            term = labels[k]
        elif v == -1:
            term = "-" + labels[k]
        elif v.im and v.re:
            term = f"({v})*{labels[k]}"
        else:
            term = f"{v}*{labels[k]}"
        if parts:
            parts.append(" - " + term[1:] if term.startswith("-") else " + " + term)
        else:
            parts.append(term)
    return "".join(parts) or "0"


# ---------------------------------------------------------------------------
# laws


def validate(sc: StructureConstants, limit: int = 20) -> ValidationReport:
    rep = ValidationReport(sc.kind)
    n = sc.dim
    if sc.kind == "raw":
        return rep
    c = sc.c
    if sc.kind == "lie":
        for i in range(n):
            for j in range(i, n):
                for m in range(n):
                    if c[i][j][m] + c[j][i][m]:
                        rep.violations.append(("antisymmetry", (i + 1, j + 1, m + 1)))
                        if len(rep.violations) >= limit:
                            return rep
        if rep.violations:
            return rep
        e = [{k: ONE} for k in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s: dict = {}
                    for a, b, cc in ((i, j, k), (k, i, j), (j, k, i)):
                        t = sc._mul_sparse(e[a], sc.prod[b][cc])
                        for key, v in t.items():
                            s[key] = s.get(key, ZERO) + v
                    for m, v in sorted(s.items()):
                        if v:
                            rep.violations.append(("jacobi", (i + 1, j + 1, k + 1, m + 1)))
                            if len(rep.violations) >= limit:
                                return rep
        return rep
    # jordan: commutativity then the linearized Jordan identity
    for i in range(n):
        for j in range(i + 1, n):
            for m in range(n):
                if c[i][j][m] != c[j][i][m]:
                    rep.violations.append(("commutativity", (i + 1, j + 1, m + 1)))
                    if len(rep.violations) >= limit:
                        return rep
    if rep.violations:
        return rep
    P = sc.prod
    mul = sc._mul_sparse
    # X[a][b][j] = (e_a e_b) e_j
    X = [[[mul(P[a][b], {j: ONE}) for j in range(n)] for b in range(n)] for a in range(n)]
    for i in range(n):
        for k in range(i, n):
            for m in range(k, n):
                for j in range(n):
                    s: dict = {}

                    def acc(vec, sign):
                        for key, v in vec.items():
                            s[key] = s.get(key, ZERO) + (v if sign > 0 else -v)

                    # (ik)(mj) - ((ik)j)m + (im)(kj) - ((im)j)k + (mk)(ij) - ((mk)j)i
                    acc(mul(P[i][k], P[m][j]), 1)
                    acc(mul(X[i][k][j], {m: ONE}), -1)
                    acc(mul(P[i][m], P[k][j]), 1)
                    acc(mul(X[i][m][j], {k: ONE}), -1)
                    acc(mul(P[m][k], P[i][j]), 1)
                    acc(mul(X[m][k][j], {i: ONE}), -1)
                    for r, v in sorted(s.items()):
                        if v:
                            rep.violations.append(("jordan", (i + 1, j + 1, k + 1, m + 1, r + 1)))
                            if len(rep.violations) >= limit:
                                return rep
    return rep


# ---------------------------------------------------------------------------
# construction


def zero_tensor(n):
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def from_brackets(dim, relations, kind="lie", params=None, labels=None, name="",
                  check=True) -> StructureConstants:
    labels = list(labels) if labels else [f"e{k + 1}" for k in range(dim)]
    if len(labels) != dim:
        raise ParseError("basis label count does not match dim")
    names = {"i": I}
    for p, v in (params or {}).items():
        names[p] = v if isinstance(v, Scalar) else Scalar.parse(str(v))
    index = {}
    for k, lab in enumerate(labels):
        if lab in names:
            raise ParseError(f"basis label {lab!r} clashes with a parameter")
        index[lab] = k
        names[lab] = Vec({k: ONE})
    c = zero_tensor(dim)
    seen = {}
    for rel in relations:
        if len(rel) != 3:
            raise ParseError(f"relation must be [label, label, expression]: {rel!r}")
        a, b, text = rel
        if a not in index:
            raise UnknownLabel(f"unknown basis label {a!r}")
        if b not in index:
            raise UnknownLabel(f"unknown basis label {b!r}")
        val = evaluate(str(text), names, unknown=ParameterMissing)
        if not isinstance(val, Vec):
            if scalar(val):
                raise ParseError(f"bracket value {text!r} is not a combination of basis vectors")
            val = Vec()
        i, j = index[a], index[b]
        for key, sign in _filled_positions(kind, i, j):
            prev = seen.get(key)
            vec = {k: (v if sign > 0 else -v) for k, v in val.d.items()}
            if prev is not None and prev != vec:
                raise ParseError(f"conflicting products for {labels[key[0]]}, {labels[key[1]]}")
            seen[key] = vec
            row = c[key[0]][key[1]]
            for k in range(dim):
                row[k] = vec.get(k, ZERO)
    sc = StructureConstants(c, kind, labels, name)
    if check:
        rep = validate(sc)
        if not rep.ok:
            raise LawViolation(rep)
    return sc


def _filled_positions(kind, i, j):
    if kind == "lie":
        if i == j:
            return [((i, j), 1)]
        return [((i, j), 1), ((j, i), -1)]
    if kind == "jordan":
        return [((i, j), 1)] if i == j else [((i, j), 1), ((j, i), 1)]
    return [((i, j), 1)]


def load_algebra(data, param_overrides=None, check=True) -> StructureConstants:
    """Build from the JSON algebra format (dict or text); ``check=False``
    skips the Jacobi or Jordan law test."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        dim = int(data["dim"])
        kind = data.get("kind", "lie")
        basis = data.get("basis") or [f"e{k + 1}" for k in range(dim)]
        params = dict(data.get("parameters") or {})
        brackets = data.get("brackets") or []
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed algebra description: {exc}") from None
    if param_overrides:
        params.update(param_overrides)
    if kind not in ("lie", "jordan"):
        raise ParseError(f"kind must be lie or jordan, got {kind!r}")
    return from_brackets(dim, brackets, kind, params, basis, data.get("name", ""), check)


def dump_algebra(sc: StructureConstants) -> str:
    return json.dumps(sc.to_dict(), ensure_ascii=False, indent=2)


# ---------------------------------------------------------------------------
# matrices


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, m = len(a), len(b)
    p = len(b[0]) if b else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if not x:
                continue
            bk = b[k]
            for j in range(p):
                if bk[j]:
                    oi[j] = oi[j] + x * bk[j]
    return out


def mat_inverse(g):
    n = len(g)
    rows = [{**{j: scalar(g[i][j]) for j in range(n) if g[i][j]},
             **{n + i: ONE}} for i in range(n)]
    piv = rref(rows, 2 * n)
    if len(piv) < n or any(c >= n for c, _ in piv):
        raise SingularMatrix("matrix is not invertible")
    inv = [[ZERO] * n for _ in range(n)]
    for c, p in piv:
        for k, v in p.items():
            if k >= n:
                inv[c][k - n] = v
    return inv


def change_basis(sc: StructureConstants, g) -> StructureConstants:
    """Structure constants in the basis f_j = sum_i g[i][j] e_i."""
    n = sc.dim
    g = [[scalar(x) for x in row] for row in g]
    ginv = mat_inverse(g)
    cols = [{i: g[i][j] for i in range(n) if g[i][j]} for j in range(n)]
    c = zero_tensor(n)
    for a in range(n):
        for b in range(n):
            v = sc._mul_sparse(cols[a], cols[b])
            if not v:
                continue
            for l in range(n):
                s = ZERO
                row = ginv[l]
                for k, x in v.items():
                    if row[k]:
                        s = s + row[k] * x
                c[a][b][l] = s
    return StructureConstants(c, sc.kind, sc.labels, sc.name)


def direct_sum(a: StructureConstants, b: StructureConstants, name="") -> StructureConstants:
    if a.kind != b.kind:
        raise KindMismatch("direct sum of algebras of different kinds")
    n = a.dim + b.dim
    c = zero_tensor(n)
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                c[i][j][k] = a.c[i][j][k]
    o = a.dim
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                c[o + i][o + j][o + k] = b.c[i][j][k]
    return StructureConstants(c, a.kind, [f"e{k + 1}" for k in range(n)], name)


# ---------------------------------------------------------------------------
# operator spaces


@dataclass
class OperatorSpace:
    dim_ambient: int
    basis: list  # n x n matrices

    @property
    def dim(self) -> int:
        return len(self.basis)

    @staticmethod
    def from_vectors(n, vectors):
        return OperatorSpace(n, [[list(v[r * n:(r + 1) * n]) for r in range(n)] for v in vectors])

    def flat(self):
        return [[x for row in m for x in row] for m in self.basis]


def operator_space_algebra(os: OperatorSpace, product="commutator", name="") -> StructureConstants:
    if product not in ("commutator", "anticommutator"):
        raise ValueError("product must be commutator or anticommutator")
    m = os.dim
    if m == 0:
        raise ValueError("empty operator space")
    n = os.dim_ambient
    basis = os.basis
    half = Scalar(1, 0) / 2
    targets = []
    for i in range(m):
        for j in range(m):
            xy = matmul(basis[i], basis[j])
            yx = matmul(basis[j], basis[i])
            if product == "commutator":
                t = [[xy[r][s] - yx[r][s] for s in range(n)] for r in range(n)]
            else:
                t = [[(xy[r][s] + yx[r][s]) * half for s in range(n)] for r in range(n)]
            targets.append([x for row in t for x in row])
    flat = os.flat()
    rows = []
    for k in range(n * n):
        row = {}
        for j in range(m):
            if flat[j][k]:
                row[j] = flat[j][k]
        for t, vec in enumerate(targets):
            if vec[k]:
                row[m + t] = vec[k]
        rows.append(row)
    piv = rref(rows, m + len(targets))
    c = zero_tensor(m)
    for col, p in piv:
        if col >= m:
            t = col - m
            raise NotClosed(t // m, t % m, targets[t])
        for key, v in p.items():
            if key >= m:
                t = key - m
                c[t // m][t % m][col] = v
    kind = "lie" if product == "commutator" else "jordan"
    sc = StructureConstants(c, kind, None, name)
    rep = validate(sc)
    if not rep.ok:
        raise LawViolation(rep)
    return sc
