"""Exact sparse polynomial arithmetic, canonical text, and parsing."""

import pytest

from qcalc.poly import (
    HBAR,
    MissingAssignment,
    NotDivisible,
    ParseError,
    Poly,
    exact_divide,
    format_poly,
    parse_poly,
    substitute,
    xvar,
)

a = Poly.var(xvar(0, 1))
b = Poly.var(xvar(1, 1))
c = Poly.var(xvar(1, 2))
h = Poly.hbar()


def test_constructors_and_equality():
    assert Poly.zero() == Poly.const(0)
    assert Poly.one() == Poly.const(1)
    assert Poly.var(HBAR) == h
    assert a != b
    assert a - a == Poly.zero()
    assert not Poly.zero()
    assert Poly.one()


def test_ring_axioms_small():
    polys = [Poly.zero(), Poly.one(), a, b, a + b, a * b - h, 2 * a - 3]
    for p in polys:
        for q in polys:
            assert p + q == q + p
            assert p * q == q * p
            for r in polys:
                assert p * (q + r) == p * q + p * r
                assert (p * q) * r == p * (q * r)


def test_integer_coercion():
    assert a + 1 - 1 == a
    assert 1 - a == -(a - 1)
    assert 3 * a == a + a + a
    assert a**0 == Poly.one()
    assert (a + b) ** 2 == a * a + 2 * a * b + b * b


def test_degree_and_leading_term():
    p = a * a * b + h**2 + 5
    assert p.degree() == 3
    mono, coeff = (a * b - 2 * b * b).leading_term()
    assert coeff == 1  # a*b beats b^2 in graded lex with a > b
    assert mono == ((xvar(0, 1), 1), (xvar(1, 1), 1))
    assert Poly.zero().degree() == -1


def test_hbar_coefficient():
    p = a * h**2 + b * h**2 + c * h + 7
    assert p.hbar_coefficient(2) == a + b
    assert p.hbar_coefficient(1) == c
    assert p.hbar_coefficient(0) == Poly.const(7)
    assert p.hbar_coefficient(3) == Poly.zero()


def test_exact_divide_roundtrip():
    factors = [a - b, a + b + h, 2 * a - 3 * c, a * b + 1]
    for p in factors:
        for q in factors:
            assert exact_divide(p * q, q) == p
    assert exact_divide(Poly.zero(), a - b) == Poly.zero()


def test_exact_divide_rejects_non_multiples():
    with pytest.raises(NotDivisible):
        exact_divide(a * a + b, a - b)
    with pytest.raises(NotDivisible):
        exact_divide(Poly.one(), Poly.const(2))
    with pytest.raises(ZeroDivisionError):
        exact_divide(a, Poly.zero())


def test_substitute():
    p = a * b + h
    assert substitute(p, {xvar(0, 1): Poly.const(2), xvar(1, 1): c, HBAR: Poly.zero()}) == 2 * c
    with pytest.raises(MissingAssignment):
        substitute(p, {xvar(0, 1): c})


def test_format_canonical_order():
    p = b + a + h + 1
    assert format_poly(p) == "x0_1 + x1_1 + h + 1"
    assert format_poly(a * a - b) == "x0_1^2 - x1_1"
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(-a) == "-x0_1"


def test_format_styles():
    p = a * b**2 - 2 * h
    assert format_poly(p, "latex") == r"x^{0}_{1} x^{1}_{1}^{2} - 2 \hbar"
    assert format_poly(p, "letters") == "a1*b1^2 - 2*h"
    assert format_poly(p, "letters", (1, 2)) == "a*b1^2 - 2*h"


def test_parse_roundtrip():
    polys = [
        Poly.zero(),
        Poly.const(-7),
        a,
        -a + 2 * b,
        (a - b) * (b - c) + h**3,
        a**4 - 6 * a * b * c * h + 1,
    ]
    for p in polys:
        assert parse_poly(format_poly(p)) == p


def test_parse_errors():
    for text in ["", "x0_1 +", "* x0_1", "x0_1 ^ x1_1", "q"]:
        with pytest.raises(ParseError):
            parse_poly(text)
