"""Small exact expression evaluator.

Texts such as ``"-1/2*a*e3 + e1"`` or ``"α^2-1/2*α+3*i"`` are parsed with
the standard ``ast`` module and folded over whatever values the caller binds
to names (scalars, polynomials, basis vectors, rational functions).
"""

from __future__ import annotations

import ast
import operator

from .errors import DenominatorVanishes, ParameterMissing, ParseError

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _normalize(text: str) -> str:
    return (text.replace("−", "-").replace("^", "**").replace("·", "*")
            .strip())


def evaluate(text: str, names: dict, *, unknown=ParameterMissing):
    """Evaluate ``text`` with the given name bindings.

    Integer literals are passed through the binding ``"__int__"`` when
    present so callers can lift them into their own ring.
    """
    src = _normalize(str(text))
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    lift = names.get("__int__")

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"only integer literals are allowed in {text!r}")
            return lift(node.value) if lift else _int_scalar(node.value)
        if isinstance(node, ast.Name):
            if node.id in names:
                return names[node.id]
            raise unknown(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp):
            val = walk(node.operand)
            if isinstance(node.op, ast.USub):
                return -val
            if isinstance(node.op, ast.UAdd):
                return val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                neg = False
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    exp, neg = exp.operand, True
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ParseError(f"exponents must be integer literals in {text!r}")
                base = walk(node.left)
                return _power(base, -exp.value if neg else exp.value)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                left, right = walk(node.left), walk(node.right)
                try:
                    return op(left, right)
                except ZeroDivisionError:
                    raise DenominatorVanishes(f"division by zero in {text!r}") from None
        raise ParseError(f"unsupported syntax in {text!r}")

    return walk(tree)


def _int_scalar(k):
    from .scalar import Scalar
    return Scalar(k)


def _power(base, k):
    if k < 0:
        try:
            return _power(1 / base if not hasattr(base, "inverse") else base.inverse(), -k)
        except ZeroDivisionError:
            raise DenominatorVanishes("negative power of zero") from None
    result = None
    for _ in range(k):
        result = base if result is None else result * base
    if result is None:
        return base ** 0
    return result
