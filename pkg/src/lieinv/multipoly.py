"""Sparse multivariate polynomials over Q(i).

Only what the formal-invariant rank and the trace invariants need: ring
operations and exact division.
"""

from __future__ import annotations

from .scalar import ZERO, Scalar, scalar


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @staticmethod
    def _raw(nvars, terms):
        p = MultiPoly.__new__(MultiPoly)
        p.nvars = nvars
        p.terms = terms
        return p

    @staticmethod
    def var(nvars: int, k: int) -> "MultiPoly":
        e = [0] * nvars
        e[k] = 1
        return MultiPoly._raw(nvars, {tuple(e): Scalar(1)})

    @staticmethod
    def const(nvars: int, c) -> "MultiPoly":
        c = scalar(c)
        return MultiPoly._raw(nvars, {(0,) * nvars: c} if c else {})

    @staticmethod
    def linear(coeffs) -> "MultiPoly":
        """Sum of coeffs[k] * x_k."""
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = scalar(c)
        return MultiPoly._raw(n, terms)

    def _co(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(self.nvars, other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = self._co(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        o = self._co(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = scalar(other)
            if not c:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, d: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division (lex order); raises if inexact."""
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        de, dc = d.leading()
        inv = dc.inverse()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            diff = tuple(a - b for a, b in zip(e, de))
            if min(diff) < 0:
                raise ArithmeticError("inexact multivariate division")
            qc = c * inv
            quot[diff] = qc
            for e2, c2 in d.terms.items():
                t = tuple(a + b for a, b in zip(e2, diff))
                v = rem.get(t, ZERO) - qc * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(self.nvars, quot)

    def __call__(self, point):
        total = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * scalar(x) ** k
            total = total + t
        return total

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{k + 1}" + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p)
            parts.append(f"({self.terms[e]})" + ("*" + mono if mono else ""))
        return " + ".join(parts)
