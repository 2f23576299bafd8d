"""Built-in catalog of low-dimensional Lie and Jordan algebras and of the
larger worked examples.

Four-dimensional Lie algebras carry their case labels "(g-1)".."(g-34)";
families (g_{3,4}, g_{4,2}, g_{4,5}, g_{4,8}) are also reachable by their
family name plus parameters, which routes to the generic case and refuses
values that belong to a separate case.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import StructureConstants, from_brackets
from .errors import InadmissibleParameter, ParameterMissing, UnknownLabel
from .exprs import evaluate
from .scalar import Scalar, scalar


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    name: str
    dim: int
    kind: str
    brackets: tuple
    params: tuple = ()
    family: str = ""
    # expressions in the parameters that must not vanish
    nonzero: tuple = ()
    psi_sig: str = ""
    phi_sig: str = ""
    labels: tuple = ()
    note: str = ""
    aliases: tuple = ()
    sample: dict = field(default_factory=dict)

    def instantiate(self, params=None, check=True) -> StructureConstants:
        values = _coerce_params(self, params)
        if check:
            for expr in self.nonzero:
                if not evaluate(expr, dict(values)):
                    shown = ", ".join(f"{k} = {v}" for k, v in values.items())
                    raise InadmissibleParameter(
                        f"{self.name} at {shown} is excluded ({expr} = 0)" + _route_hint(self, values))
        return from_brackets(self.dim, [list(b) for b in self.brackets], self.kind, values,
                             list(self.labels) or None, self.display(values))

    def display(self, values=None) -> str:
        if not self.params or not values:
            return self.name
        return self.name + ", " + ", ".join(f"{p} = {values[p]}" for p in self.params)


def _coerce_params(entry, params):
    params = dict(params or {})
    unknown = set(params) - set(entry.params)
    if unknown:
        raise ParameterMissing(f"{entry.label} has no parameter(s) {sorted(unknown)}")
    out = {}
    for p in entry.params:
        if p not in params:
            raise ParameterMissing(f"{entry.label} needs parameter {p}")
        v = params[p]
        out[p] = v if isinstance(v, Scalar) else Scalar.parse(str(v)) if isinstance(v, str) else scalar(v)
    return out


def _route_hint(entry, values):
    if not entry.family or len(entry.params) != 1:
        return ""
    v = values[entry.params[0]]
    for e in ENTRIES:
        if e.family == entry.family and not e.params and e.name == f"{entry.family}({v})":
            return f"; use the separate entry {e.label} = {e.name}"
    return ""


def _b(*triples):
    return tuple(tuple(t) for t in triples)


OMEGA_FREE = "a^2+a+1"

_ENTRIES = [
    # ---- Lie, dim 1-3
    CatalogEntry("g_1", "g_1", 1, "lie", ()),
    CatalogEntry("2g_1", "2g_1", 2, "lie", ()),
    CatalogEntry("g_{2,1}", "g_{2,1}", 2, "lie", _b(("e1", "e2", "e1"))),
    CatalogEntry("3g_1", "3g_1", 3, "lie", ()),
    CatalogEntry("g_{2,1}+g_1", "g_{2,1}⊕g_1", 3, "lie", _b(("e1", "e2", "e2"))),
    CatalogEntry("g_{3,1}", "g_{3,1}", 3, "lie", _b(("e2", "e3", "e1"))),
    CatalogEntry("g_{3,2}", "g_{3,2}", 3, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "e1+e2"))),
    CatalogEntry("g_{3,3}", "g_{3,3}", 3, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "e2"))),
    CatalogEntry("g_{3,4}(-1)", "g_{3,4}(-1)", 3, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "-e2")),
                 family="g_{3,4}"),
    CatalogEntry("g_{3,4}", "g_{3,4}(a)", 3, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "a*e2")),
                 params=("a",), family="g_{3,4}", nonzero=("a", "a-1", "a+1"), sample={"a": 2}),
    CatalogEntry("sl_2", "sl(2,C)", 3, "lie",
                 _b(("e1", "e2", "e1"), ("e2", "e3", "e3"), ("e1", "e3", "2*e2")),
                 aliases=("sl(2,C)", "sl(2)", "sl2")),
    # ---- Lie, dim 4
    CatalogEntry("(g-1)", "4g_1", 4, "lie", (), psi_sig="16", phi_sig="24"),
    CatalogEntry("(g-2)", "g_{2,1}⊕2g_1", 4, "lie", _b(("e1", "e2", "e1")),
                 psi_sig="11_1, 8", phi_sig="16_1, 14"),
    CatalogEntry("(g-3)", "g_{2,1}⊕g_{2,1}", 4, "lie", _b(("e1", "e2", "e1"), ("e3", "e4", "e3")),
                 psi_sig="6_1, 4", phi_sig="12_2, 10"),
    CatalogEntry("(g-4)", "g_{3,1}⊕g_1", 4, "lie", _b(("e2", "e3", "e1")),
                 psi_sig="11_1, 10", phi_sig="20_1, 19"),
    CatalogEntry("(g-5)", "g_{3,2}⊕g_1", 4, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "e1+e2")),
                 psi_sig="7_1, 6_1, 5", phi_sig="13_1, 12"),
    CatalogEntry("(g-6)", "g_{3,3}⊕g_1", 4, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "e2")),
                 psi_sig="8_1, 7_1, 5", phi_sig="15_1, 12"),
    CatalogEntry("(g-7)", "g_{3,4}(-1)⊕g_1", 4, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "-e2")),
                 psi_sig="7_2, 6_1, 5", phi_sig="16_2, 15_1, 14"),
    CatalogEntry("(g-8)", "g_{3,4}(a)⊕g_1", 4, "lie", _b(("e1", "e3", "e1"), ("e2", "e3", "a*e2")),
                 params=("a",), family="g_{3,4}⊕g_1", nonzero=("a", "a-1", "a+1"),
                 psi_sig="7_1, 6_3, 5", phi_sig="13_3, 12", sample={"a": 2}),
    CatalogEntry("(g-9)", "sl(2,C)⊕g_1", 4, "lie",
                 _b(("e1", "e2", "e1"), ("e2", "e3", "e3"), ("e1", "e3", "2*e2")),
                 psi_sig="6_1, 4_2, 2_1, 1", phi_sig="14_1, 12_2, 10_1, 9"),
    CatalogEntry("(g-10)", "g_{4,1}", 4, "lie", _b(("e2", "e4", "e1"), ("e3", "e4", "e2")),
                 psi_sig="7", phi_sig="16_2, 15"),
    CatalogEntry("(g-11)", "g_{4,2}(a)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e2+e3")),
                 params=("a",), family="g_{4,2}", nonzero=("a", "a-1", "a+1", "a+2"),
                 psi_sig="6_1, 5_2, 4", phi_sig="13_2, 12", sample={"a": 2}),
    CatalogEntry("(g-12)", "g_{4,2}(1)", 4, "lie",
                 _b(("e1", "e4", "e1"), ("e2", "e4", "e2"), ("e3", "e4", "e2+e3")),
                 family="g_{4,2}", psi_sig="8_1, 4", phi_sig="15_1, 12"),
    CatalogEntry("(g-13)", "g_{4,2}(-2)", 4, "lie",
                 _b(("e1", "e4", "-2*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e2+e3")),
                 family="g_{4,2}", psi_sig="6_1, 5_2, 4", phi_sig="15_1, 12"),
    CatalogEntry("(g-14)", "g_{4,2}(-1)", 4, "lie",
                 _b(("e1", "e4", "-e1"), ("e2", "e4", "e2"), ("e3", "e4", "e2+e3")),
                 family="g_{4,2}", psi_sig="6_2, 4", phi_sig="16_1, 13_1, 12"),
    CatalogEntry("(g-15)", "g_{4,3}", 4, "lie", _b(("e1", "e4", "e1"), ("e3", "e4", "e2")),
                 psi_sig="7_1, 6", phi_sig="16_1, 13"),
    CatalogEntry("(g-16)", "g_{4,4}", 4, "lie",
                 _b(("e1", "e4", "e1"), ("e2", "e4", "e1+e2"), ("e3", "e4", "e2+e3")),
                 psi_sig="6_1, 4", phi_sig="13_1, 12"),
    CatalogEntry("(g-17)", "g_{4,5}(a,b)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "b*e2"), ("e3", "e4", "e3")),
                 params=("a", "b"), family="g_{4,5}",
                 nonzero=("a", "a-1", "a+1", "a-b", "a+b", "a*b-1", "a-b^2", "a+1+b",
                          "b", "b-1", "b+1", "b-a^2"),
                 psi_sig="6_1, 5_6, 4", phi_sig="13_3, 12", sample={"a": 3, "b": 5}),
    CatalogEntry("(g-18)", "g_{4,5}(a,-1-a)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "(-1-a)*e2"), ("e3", "e4", "e3")),
                 params=("a",), family="g_{4,5}(a,-1-a)",
                 nonzero=("a", "a-1", "a+1", "a+2", "2*a+1", OMEGA_FREE),
                 psi_sig="6_1, 5_6, 4", phi_sig="15_1, 12", sample={"a": 3}),
    CatalogEntry("(g-19)", "g_{4,5}(a,a^2)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "a^2*e2"), ("e3", "e4", "e3")),
                 params=("a",), family="g_{4,5}(a,a^2)",
                 nonzero=("a", "a-1", "a+1", "a^2+1", OMEGA_FREE),
                 psi_sig="6_3, 5_2, 4", phi_sig="13_3, 12", sample={"a": 2}),
    CatalogEntry("(g-20)", "g_{4,5}(a,1)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e3")),
                 params=("a",), family="g_{4,5}(a,1)", nonzero=("a", "a-1", "a+1", "a+2"),
                 psi_sig="8_1, 6_2, 4", phi_sig="15_1, 13_1, 12", sample={"a": 3}),
    CatalogEntry("(g-21)", "g_{4,5}(a,-1)", 4, "lie",
                 _b(("e1", "e4", "a*e1"), ("e2", "e4", "-e2"), ("e3", "e4", "e3")),
                 params=("a",), family="g_{4,5}(a,-1)", nonzero=("a", "a-1", "a+1", "a^2+1"),
                 psi_sig="6_2, 5_4, 4", phi_sig="16_1, 13_2, 12", sample={"a": 2}),
    CatalogEntry("(g-22)", "g_{4,5}(1,1)", 4, "lie",
                 _b(("e1", "e4", "e1"), ("e2", "e4", "e2"), ("e3", "e4", "e3")),
                 psi_sig="12_1, 4", phi_sig="18_1, 12"),
    CatalogEntry("(g-23)", "g_{4,5}(-1,1)", 4, "lie",
                 _b(("e1", "e4", "-e1"), ("e2", "e4", "e2"), ("e3", "e4", "e3")),
                 psi_sig="8_2, 4", phi_sig="20_1, 13_1, 12"),
    CatalogEntry("(g-24)", "g_{4,5}(-2,1)", 4, "lie",
                 _b(("e1", "e4", "-2*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e3")),
                 psi_sig="8_1, 6_2, 4", phi_sig="16_1, 12"),
    # a = -1/2+sqrt(3)/2 i is not in Q(i); ad e4 acts by a 3-cycle on e1, e2, e3
    # instead, which has the same eigenvalues 1, a, conj(a).
    CatalogEntry("(g-25)", "g_{4,5}(ω,ω̄)", 4, "lie",
                 _b(("e1", "e4", "e2"), ("e2", "e4", "e3"), ("e3", "e4", "e1")),
                 psi_sig="7_2, 6_1, 4", phi_sig="15_1, 12",
                 note="rational model: [e1,e4]=e2, [e2,e4]=e3, [e3,e4]=e1"),
    CatalogEntry("(g-26)", "g_{4,5}(i,-1)", 4, "lie",
                 _b(("e1", "e4", "i*e1"), ("e2", "e4", "-e2"), ("e3", "e4", "e3")),
                 psi_sig="6_4, 4", phi_sig="16_1, 13_2, 12"),
    CatalogEntry("(g-27)", "g_{4,7}", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "2*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e2+e3")),
                 psi_sig="5_1, 4_1, 3", phi_sig="12_3, 11"),
    CatalogEntry("(g-28)", "g_{4,8}(a)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "(1+a)*e1"), ("e2", "e4", "e2"), ("e3", "e4", "a*e3")),
                 params=("a",), family="g_{4,8}",
                 nonzero=("a", "a-1", "a+1", "a-2", "a+2", "2*a-1", "2*a+1", OMEGA_FREE),
                 psi_sig="5_1, 4_3, 3", phi_sig="12_5, 11", sample={"a": 3}),
    CatalogEntry("(g-29)", "g_{4,8}(1)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "2*e1"), ("e2", "e4", "e2"), ("e3", "e4", "e3")),
                 family="g_{4,8}", psi_sig="7_1, 4_1, 3", phi_sig="14_1, 12_2, 11"),
    CatalogEntry("(g-30)", "g_{4,8}(2)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "3*e1"), ("e2", "e4", "e2"), ("e3", "e4", "2*e3")),
                 family="g_{4,8}", psi_sig="5_2, 4_1, 3", phi_sig="12_5, 11"),
    CatalogEntry("(g-31)", "g_{4,8}(0)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "e1"), ("e2", "e4", "e2")),
                 family="g_{4,8}", psi_sig="6_1, 5_1, 4", phi_sig="13_1, 12_1, 11"),
    CatalogEntry("(g-32)", "g_{4,8}(-1)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e2", "e4", "e2"), ("e3", "e4", "-e3")),
                 family="g_{4,8}", psi_sig="6_1, 5_1, 4", phi_sig="14_1, 13_1, 12"),
    CatalogEntry("(g-33)", "g_{4,8}(-2)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "-e1"), ("e2", "e4", "e2"), ("e3", "e4", "-2*e3")),
                 family="g_{4,8}", psi_sig="5_1, 4_3, 3", phi_sig="16_1, 12_2, 11"),
    # a = -1/2+sqrt(3)/2 i again; e4 is rescaled by a so that ad e4 has the
    # rational characteristic polynomial x^2+x+1 on span(e2, e3).
    CatalogEntry("(g-34)", "g_{4,8}(ω)", 4, "lie",
                 _b(("e2", "e3", "e1"), ("e1", "e4", "-e1"), ("e2", "e4", "e3"), ("e3", "e4", "-e2-e3")),
                 psi_sig="5_1, 4_3, 3", phi_sig="12_4, 11",
                 note="rational model: [e2,e3]=e1, [e1,e4]=-e1, [e2,e4]=e3, [e3,e4]=-e2-e3"),
    # ---- Jordan
    CatalogEntry("j_1", "j_1", 1, "jordan", ()),
    CatalogEntry("j_{1,1}", "j_{1,1}", 1, "jordan", _b(("e1", "e1", "e1"))),
    CatalogEntry("2j_1", "2j_1", 2, "jordan", ()),
    CatalogEntry("j_{2,1}", "j_{2,1}", 2, "jordan", _b(("e1", "e1", "e1"), ("e1", "e2", "e2"))),
    CatalogEntry("j_{2,2}", "j_{2,2}", 2, "jordan", _b(("e2", "e2", "e2"),)),
    CatalogEntry("j_{2,3}", "j_{2,3}", 2, "jordan", _b(("e1", "e1", "e2"),)),
    CatalogEntry("j_{2,4}", "j_{2,4}", 2, "jordan", _b(("e1", "e1", "e1"), ("e1", "e2", "1/2*e2"))),
    CatalogEntry("j_{2,5}", "j_{2,5}", 2, "jordan",
                 _b(("e1", "e1", "e1"), ("e2", "e2", "-e1"), ("e1", "e2", "e2"))),
]

GRADED_BASIS = ("l01", "l02", "l10", "l20", "l11", "l22", "l12", "l21")

# Contraction parameters of the Pauli-graded sl(3) that lead to three of the
# eight-dimensional algebras, rows and columns in GRADED_BASIS order. The
# algebras themselves are stored through their brackets below; these
# matrices record where they come from and fix the bracket support.
GRADED_EPSILONS = {
    "l_{18,25}": (("0", "0", "1", "a", "0", "0", "0", "0"),
                  ("0", "0", "1", "1", "0", "0", "0", "0"),
                  ("1", "1", "0", "0", "1", "0", "1", "0"),
                  ("a", "1", "0", "0", "0", "0", "0", "0"),
                  ("0", "0", "1", "0", "0", "0", "0", "0"),
                  ("0",) * 8,
                  ("0", "0", "1", "0", "0", "0", "0", "0"),
                  ("0",) * 8),
    "l_{17,13}": (("0", "0", "a", "1", "0", "1", "0", "0"),
                  ("0", "0", "1", "0", "0", "0", "0", "0"),
                  ("a", "1", "0", "0", "1", "1", "0", "0"),
                  ("1", "0", "0", "0", "0", "1", "0", "0"),
                  ("0", "0", "1", "0", "0", "0", "0", "0"),
                  ("1", "0", "1", "1", "0", "0", "0", "0"),
                  ("0",) * 8,
                  ("0",) * 8),
    "l_{17,7}": (("0", "0", "a", "1", "1", "1", "0", "0"),
                 ("0", "0", "1", "0", "0", "1", "0", "0"),
                 ("a", "1", "0", "0", "1", "0", "0", "0"),
                 ("1", "0", "0", "0", "0", "0", "0", "0"),
                 ("1", "0", "1", "0", "0", "0", "0", "0"),
                 ("1", "1", "0", "0", "0", "0", "0", "0"),
                 ("0",) * 8,
                 ("0",) * 8),
}


def graded_grade(label: str):
    """Z3 x Z3 degree of a basis vector named l<j><k>."""
    return int(label[1]), int(label[2])


def graded_epsilon(label: str, params=None):
    """8x8 epsilon matrix of a graded-contraction entry with a substituted."""
    e = find(label)
    if e.label not in GRADED_EPSILONS:
        raise UnknownLabel(f"no epsilon matrix stored for {label!r}")
    names = {k: scalar(v) for k, v in _coerce_params(e, params).items()}
    return [[scalar(evaluate(x, names)) for x in row] for row in GRADED_EPSILONS[e.label]]

_ENTRIES += [
    CatalogEntry("l_{17,9}", "l_{17,9}", 8, "lie",
                 _b(("l01", "l10", "l11"), ("l01", "l20", "l21"), ("l01", "l11", "l12"),
                    ("l01", "l22", "l20"), ("l02", "l10", "l12"), ("l10", "l11", "l21"),
                    ("l20", "l22", "l12")), labels=GRADED_BASIS),
    CatalogEntry("l_{17,12}", "l_{17,12}", 8, "lie",
                 _b(("l01", "l10", "l11"), ("l01", "l20", "l21"), ("l01", "l22", "l20"),
                    ("l02", "l10", "l12"), ("l02", "l22", "l21"), ("l10", "l11", "l21"),
                    ("l20", "l22", "l12")), labels=GRADED_BASIS),
    CatalogEntry("l_{18,25}", "l_{18,25}(a)", 8, "lie",
                 _b(("l01", "l10", "l11"), ("l01", "l20", "-a*l21"), ("l02", "l10", "l12"),
                    ("l02", "l20", "l22"), ("l10", "l11", "l21"), ("l10", "l12", "l22")),
                 params=("a",), labels=GRADED_BASIS, sample={"a": 3}),
    CatalogEntry("l_{17,13}", "l_{17,13}(a)", 8, "lie",
                 _b(("l01", "l10", "a*l11"), ("l01", "l20", "l21"), ("l01", "l22", "l20"),
                    ("l02", "l10", "l12"), ("l10", "l11", "l21"), ("l10", "l22", "l02"),
                    ("l20", "l22", "l12")),
                 params=("a",), labels=GRADED_BASIS, sample={"a": 3}),
    CatalogEntry("l_{17,7}", "l_{17,7}(a)", 8, "lie",
                 _b(("l01", "l10", "-a*l11"), ("l01", "l20", "l21"), ("l01", "l11", "l12"),
                    ("l01", "l22", "l20"), ("l02", "l10", "l12"), ("l02", "l22", "l21"),
                    ("l10", "l11", "l21")),
                 params=("a",), labels=GRADED_BASIS, sample={"a": 3}),
    # pairs of non-isomorphic algebras told apart by exactly one slot of inv
    CatalogEntry("ind-1a", "ind-1a", 7, "lie",
                 _b(("e4", "e6", "e1"), ("e4", "e7", "e2"), ("e5", "e6", "e2"), ("e5", "e7", "e3"))),
    CatalogEntry("ind-1b", "ind-1b", 7, "lie",
                 _b(("e4", "e6", "e1"), ("e4", "e7", "e2"), ("e5", "e7", "e3"))),
    CatalogEntry("ind-2a", "ind-2a", 8, "lie",
                 _b(("e2", "e3", "e4"), ("e2", "e4", "e5"), ("e2", "e6", "-e7"), ("e2", "e8", "e1"),
                    ("e3", "e7", "e1"), ("e4", "e6", "e1"), ("e6", "e8", "e5"))),
    CatalogEntry("ind-2b", "ind-2b", 8, "lie",
                 _b(("e2", "e3", "e4"), ("e2", "e4", "e5"), ("e3", "e6", "e8"), ("e2", "e8", "e1"),
                    ("e3", "e7", "e1"), ("e4", "e6", "e1"), ("e6", "e8", "e5"))),
    CatalogEntry("ind-3a", "ind-3a", 7, "lie",
                 _b(("e1", "e2", "e4"), ("e1", "e3", "e5"), ("e1", "e6", "e1"), ("e1", "e7", "e3"),
                    ("e2", "e6", "-e2"), ("e3", "e6", "e3"), ("e5", "e6", "2*e5"))),
    CatalogEntry("ind-3b", "ind-3b", 7, "lie",
                 _b(("e1", "e2", "e4"), ("e1", "e4", "e5"), ("e1", "e6", "e1"), ("e1", "e7", "e3"),
                    ("e2", "e6", "-2*e2"), ("e3", "e6", "e3"), ("e4", "e6", "-e4"))),
    CatalogEntry("ind-4a", "ind-4a", 8, "lie",
                 _b(("e1", "e3", "-e3"), ("e1", "e4", "e4"), ("e1", "e6", "2*e6"), ("e1", "e7", "-e7"),
                    ("e1", "e8", "e8"), ("e3", "e6", "e8"), ("e4", "e5", "e8"), ("e4", "e7", "e2"))),
    CatalogEntry("ind-4b", "ind-4b", 8, "lie",
                 _b(("e1", "e2", "-2*e2"), ("e1", "e3", "-e3"), ("e1", "e4", "e4"), ("e1", "e6", "2*e6"),
                    ("e1", "e8", "e8"), ("e2", "e6", "e7"), ("e3", "e6", "e8"), ("e4", "e5", "e8"))),
    # four-dimensional algebras given in a scrambled basis
    CatalogEntry("scrambled-1", "scrambled-1", 4, "lie",
                 _b(("e1", "e2", "-e1-e2+e3"), ("e1", "e3", "-6*e2+4*e3"), ("e1", "e4", "2*e1-e2+e4"),
                    ("e2", "e3", "3*e1-9*e2+5*e3"), ("e2", "e4", "4*e1-2*e2+2*e4"),
                    ("e3", "e4", "6*e1-3*e2+3*e4"))),
    CatalogEntry("scrambled-2", "scrambled-2", 4, "lie",
                 _b(("e1", "e2", "4*e1+3*e2-6*e3+2*e4"), ("e1", "e3", "15*e1+5*e2-15*e3+5*e4"),
                    ("e1", "e4", "50*e1+15*e2-48*e3+16*e4"), ("e2", "e3", "21*e1+2*e2-15*e3+5*e4"),
                    ("e2", "e4", "93*e1+21*e2-81*e3+27*e4"), ("e3", "e4", "90*e1+25*e2-84*e3+28*e4"))),
]

ENTRIES = tuple(_ENTRIES)
_BY_LABEL = {e.label: e for e in ENTRIES}


def _norm(label: str) -> str:
    return label.replace(" ", "").replace("⊕", "+").replace("\\oplus", "+").replace("−", "-")


_LOOKUP: dict = {}
for _e in ENTRIES:
    for _key in (_e.label, _e.name, *(_e.aliases)):
        _LOOKUP.setdefault(_norm(_key), _e)
    if _e.family and _e.params:
        _LOOKUP.setdefault(_norm(_e.family), _e)


def find(label: str) -> CatalogEntry:
    e = _LOOKUP.get(_norm(label))
    if e is None:
        raise UnknownLabel(f"unknown catalog label {label!r}")
    return e


def catalog_get(label: str, params=None, check=True) -> StructureConstants:
    return find(label).instantiate(params, check)


def four_dim_cases():
    return [e for e in ENTRIES if e.label.startswith("(g-")]


def three_dim_entries():
    return [e for e in ENTRIES if e.kind == "lie" and e.dim == 3]


def jordan_entries(dim=None):
    return [e for e in ENTRIES if e.kind == "jordan" and (dim is None or e.dim == dim)]


# Other names used in the literature for the same algebras (case, ours, others).
NOTATIONS = (
    ("", "2g_1", "C^2", ""),
    ("", "g_{2,1}", "r_2(C)", ""),
    ("", "3g_1", "C^3", ""),
    ("", "g_{2,1}⊕g_1", "r_2(C)⊕C", ""),
    ("", "g_{3,1}", "n_3(C)", ""),
    ("", "g_{3,2}", "r_3(C)", ""),
    ("", "g_{3,3}", "r_{3,1}(C)", ""),
    ("", "g_{3,4}(-1)", "r_{3,-1}(C)", ""),
    ("", "g_{3,4}(a)", "r_{3,a}(C)", ""),
    ("", "sl(2,C)", "sl_2(C)", ""),
    ("(g-1)", "4g_1", "C^4", "L_0"),
    ("(g-2)", "g_{2,1}⊕2g_1", "r_2(C)⊕C^2", "L_4(∞)"),
    ("(g-3)", "g_{2,1}⊕g_{2,1}", "r_2(C)⊕r_2(C)", "L_9"),
    ("(g-4)", "g_{3,1}⊕g_1", "n_3(C)⊕C", "L_1"),
    ("(g-5)", "g_{3,2}⊕g_1", "r_3(C)⊕C", "L_7(1,0)"),
    ("(g-6)", "g_{3,3}⊕g_1", "r_{3,1}(C)⊕C", "L_4(0)"),
    ("(g-7)", "g_{3,4}(-1)⊕g_1", "r_{3,-1}(C)⊕C", "L_7(-1,0)"),
    ("(g-8)", "g_{3,4}(a)⊕g_1", "r_{3,a}(C)⊕C", "L_7(a,0)"),
    ("(g-9)", "sl(2,C)⊕g_1", "sl_2(C)⊕C", "L_6"),
    ("(g-10)", "g_{4,1}", "n_4", "L_2"),
    ("(g-11)", "g_{4,2}(a)", "g_2(a/(a+2)^3, (2a+1)/(a+2)^2)", "L_7(a,1)"),
    ("(g-12)", "g_{4,2}(1)", "g_5", "L_4(1)"),
    ("(g-13)", "g_{4,2}(-2)", "g_3(27/4)", "L_7(-2,1)"),
    ("(g-14)", "g_{4,2}(-1)", "g_2(-1,-1)", "L_7(-1,1)"),
    ("(g-15)", "g_{4,3}", "g_2(0,0)", "L_7(0,0)"),
    ("(g-16)", "g_{4,4}", "g_2(1/27,1/3)", "L_7(1,1)"),
    ("(g-17)", "g_{4,5}(a,b)", "g_2(ab/(a+b+1)^3, (ab+a+b)/(a+b+1)^2)", "L_7(a,b)"),
    ("(g-18)", "g_{4,5}(a,-1-a)", "g_3((a^2+a+1)/(a^2(a+1)^2))", "L_7(a,-1-a)"),
    ("(g-19)", "g_{4,5}(a,a^2)", "g_2(a^3/(a+a^2+1)^3, (a^3+a+a^2)/(a+a^2+1)^2)", "L_7(a,a^2)"),
    ("(g-20)", "g_{4,5}(a,1)", "g_1(a)", "L_4(a)"),
    ("(g-21)", "g_{4,5}(a,-1)", "g_2(-1/a^2,-1/a^2)", "L_7(a,-1)"),
    ("(g-22)", "g_{4,5}(1,1)", "g_1(1)", "L_3"),
    ("(g-23)", "g_{4,5}(-1,1)", "g_1(-1)", "L_4(-1)"),
    ("(g-24)", "g_{4,5}(-2,1)", "g_1(-2)", "L_4(-2)"),
    ("(g-25)", "g_{4,5}(ω,ω̄)", "g_4", "L_7(ω,ω̄)"),
    ("(g-26)", "g_{4,5}(i,-1)", "g_2(1,1)", "L_7(i,-1)"),
    ("(g-27)", "g_{4,7}", "g_{4,8}(1/4)", "L_8(1)"),
    ("(g-28)", "g_{4,8}(a)", "g_8(a/(a+1)^2)", "L_8(a)"),
    ("(g-29)", "g_{4,8}(1)", "g_6", "L_5"),
    ("(g-30)", "g_{4,8}(2)", "g_8(2/9)", "L_8(2)"),
    ("(g-31)", "g_{4,8}(0)", "g_8(0)", "L_8(0)"),
    ("(g-32)", "g_{4,8}(-1)", "g_7", "L_8(-1)"),
    ("(g-33)", "g_{4,8}(-2)", "g_8(-2)", "L_8(-2)"),
    ("(g-34)", "g_{4,8}(ω)", "g_8(ω)", "L_8(ω)"),
)


def notation(label: str):
    """Row of NOTATIONS for a case label or our name."""
    key = _norm(label)
    for row in NOTATIONS:
        if _norm(row[0]) == key or _norm(row[1]) == key:
            return row
    raise UnknownLabel(f"no notation entry for {label!r}")


__all__ = ["CatalogEntry", "ENTRIES", "NOTATIONS", "catalog_get", "find", "four_dim_cases",
           "jordan_entries", "notation", "three_dim_entries"]
