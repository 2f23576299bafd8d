import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from lieinv.errors import ParseError
from lieinv.scalar import I, ONE, ZERO, Scalar, scalar
from oracle import to_sympy
from support import scalars

import pytest


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE


@given(scalars, scalars)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b) == sp.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a + b) == to_sympy(a) + to_sympy(b)
    if b:
        assert sp.simplify(to_sympy(a / b) - to_sympy(a) / to_sympy(b)) == 0


@given(scalars)
def test_text_round_trip(a):
    assert Scalar.parse(str(a)) == a


@given(scalars, st.integers(-4, 4))
def test_powers(a, k):
    if k < 0 and not a:
        return
    assert to_sympy(a ** k) == sp.nsimplify(sp.expand(to_sympy(a) ** k))


def test_format():
    assert str(Scalar(3, -1) / 2) == "3/2-1/2*i"
    assert str(I) == "i"
    assert str(-I) == "-i"
    assert str(scalar("2/4")) == "1/2"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_parse_rejects_floats():
    with pytest.raises(ParseError):
        Scalar.parse("0.5")
