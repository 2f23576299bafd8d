"""Exception types shared across the package.

Every error that the CLI reports as a domain failure derives from
``LieInvError``; anything else escaping is a bug.
"""


class LieInvError(Exception):
    """Base class for domain errors (CLI exit code 1)."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ParseError(LieInvError):
    code = "parse_error"


class ZeroPolynomial(LieInvError):
    code = "zero_polynomial"


class ZeroDivisorIsZero(LieInvError, ZeroDivisionError):
    code = "zero_divisor_is_zero"


class Split(LieInvError):
    """A zero divisor was met modulo m = m1*m2; callers re-run on both branches."""

    code = "split"

    def __init__(self, m1, m2):
        super().__init__(f"modulus splits into {m1} and {m2}")
        self.m1 = m1
        self.m2 = m2


class UnknownLabel(LieInvError):
    code = "unknown_label"


class ParameterMissing(LieInvError):
    code = "parameter_missing"


class DenominatorVanishes(LieInvError):
    code = "denominator_vanishes"


class LawViolation(LieInvError):
    code = "law_violation"

    def __init__(self, report):
        super().__init__(f"structure constants violate the {report.kind} laws: "
                         f"{report.violations[0]}")
        self.report = report


class SingularMatrix(LieInvError):
    code = "singular_matrix"


class KindMismatch(LieInvError):
    code = "kind_mismatch"


class DimMismatch(LieInvError):
    code = "dim_mismatch"


class NotClosed(LieInvError):
    code = "not_closed"

    def __init__(self, i, j, residual):
        super().__init__(f"product of basis elements {i} and {j} leaves the span")
        self.i, self.j, self.residual = i, j, residual


class UnsupportedDegree(LieInvError):
    code = "unsupported_degree"


class InadmissibleParameter(LieInvError):
    code = "inadmissible_parameter"


class NoMatch(LieInvError):
    code = "no_match"


class AmbiguousSignature(LieInvError):
    code = "ambiguous_signature"


class GradingNotClosed(LieInvError):
    code = "grading_not_closed"

    def __init__(self, i, j):
        super().__init__(f"[L_{i}, L_{j}] is not contained in the graded component")
        self.i, self.j = i, j


class EpsilonNotSymmetric(LieInvError):
    code = "epsilon_not_symmetric"


class JacobiFails(LieInvError):
    code = "jacobi_fails"

    def __init__(self, i, j, k):
        super().__init__(f"graded Jacobi condition fails for components ({i}, {j}, {k})")
        self.i, self.j, self.k = i, j, k


class DivergentEntry(LieInvError):
    code = "divergent_entry"

    def __init__(self, i, j, k):
        super().__init__(f"structure constant c[{i}][{j}][{k}] diverges as eps -> 0")
        self.i, self.j, self.k = i, j, k


class SingularU(LieInvError):
    code = "singular_u"
