from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tristrip import BiPoly, Strip, UniPoly, Var, diff, eval_poly, integrate_y, substitute_y, tricomi_apply
from tristrip.polynomial import X, Y

from helpers import bipolys, from_sympy, small_fractions


def canonical(p: BiPoly) -> bool:
    return all(c != 0 and c.denominator > 0 and gcd(abs(c.numerator), c.denominator) == 1
               for c in p.terms.values())


def test_add():
    assert (X**2 * Y) + (-(X**2 * Y)) == BiPoly()
    assert (X + Y) + (X - Y) == 2 * X
    u = from_sympy("x**5*y**9/72 - 5*x**3*y**12/2376 + x*y**15/16632")
    assert u + BiPoly() == u


def test_zero_is_unique():
    assert BiPoly({(1, 1): 0, (0, 0): Fraction(0, 5)}).terms == {}
    assert X - X == BiPoly.zero()


def test_mul():
    assert X * Y == BiPoly.monomial(1, 1)
    assert (X + Y) * (X - Y) == X**2 - Y**2
    assert (Fraction(1, 2) * X) * (Fraction(1, 3) * Y**2) == BiPoly.monomial(1, 2, Fraction(1, 6))


def test_diff():
    assert diff(X**5 * Y**7, Var.X, 2) == 20 * X**3 * Y**7
    assert diff(BiPoly.const(7), Var.X, 1) == 0
    assert diff(Y**9, Var.Y, 2) == 72 * Y**7
    assert diff(X**3, "x", 0) == X**3


def test_integrate_y():
    assert integrate_y(UniPoly(Var.Y, {3: 1})) == UniPoly(Var.Y, {4: Fraction(1, 4)})
    assert integrate_y(UniPoly(Var.Y)) == UniPoly(Var.Y)
    assert integrate_y(UniPoly(Var.Y, [1, 2])) == UniPoly(Var.Y, [0, 1, 1])
    with pytest.raises(ValueError):
        integrate_y(UniPoly(Var.X, [0, 1]))


def test_tricomi_apply():
    u = from_sympy("x**5*y**9/72 - 5*x**3*y**12/2376 + x*y**15/16632")
    assert tricomi_apply(u) == X**5 * Y**7
    assert tricomi_apply(BiPoly.const(1)) == 0
    assert tricomi_apply(Y**3) == 6 * Y


def test_eval():
    assert eval_poly(X**2 * Y, 2, 3) == 12
    assert eval_poly(BiPoly(), Fraction(7, 3), -1) == 0
    assert eval_poly(X - Y, Fraction(1, 2), Fraction(1, 2)) == 0


def test_substitute_y():
    assert substitute_y(X**2 * Y + Y**2, 0) == UniPoly(Var.X)
    b = Fraction(5, 3)
    assert substitute_y(X - Y, b) == UniPoly(Var.X, {0: -b, 1: 1})
    full = from_sympy("y/840*(-504*x**3*y**5+504*b**5*x**3+84*x**2*y**4-84*b**4*x**2"
                      "+42*x*y**8-252*b**5*x*y**3+210*b**8*x-3*y**7+14*b**4*y**3-11*b**7)", b=2)
    assert substitute_y(full, 0) == 0


def test_strip_classification():
    assert Strip(0, 1).classification() == "elliptic"
    assert Strip(-2, 0).classification() == "hyperbolic"
    assert Strip(Fraction(-1, 2), 3).classification() == "mixed"
    with pytest.raises(ValueError):
        Strip(1, 1)
    with pytest.raises(ValueError):
        Strip(2, -1)


def test_exact_only():
    with pytest.raises(TypeError):
        BiPoly({(0, 0): 0.5})


@given(bipolys(), bipolys(), small_fractions, small_fractions)
def test_tricomi_is_linear(p, q, alpha, beta):
    lhs = tricomi_apply(alpha * p + beta * q)
    rhs = alpha * tricomi_apply(p) + beta * tricomi_apply(q)
    assert lhs == rhs
    assert canonical(lhs)


@given(bipolys(), bipolys())
def test_canonical_closure(p, q):
    for r in (p + q, p * q, p - q, diff(p, Var.X, 2), diff(q, Var.Y, 1), tricomi_apply(p)):
        assert canonical(r)


@given(bipolys())
def test_mixed_partials_commute(p):
    assert diff(diff(p, Var.X, 1), Var.Y, 1) == diff(diff(p, Var.Y, 1), Var.X, 1)


@settings(max_examples=50)
@given(bipolys(max_degree=5), bipolys(max_degree=5), small_fractions, small_fractions)
def test_eval_is_a_ring_homomorphism(p, q, x0, y0):
    assert eval_poly(p * q, x0, y0) == eval_poly(p, x0, y0) * eval_poly(q, x0, y0)
    assert eval_poly(p + q, x0, y0) == eval_poly(p, x0, y0) + eval_poly(q, x0, y0)


@given(bipolys(), small_fractions, small_fractions)
def test_substitute_agrees_with_eval(p, x0, y0):
    assert substitute_y(p, y0)(x0) == eval_poly(p, x0, y0)


@given(st.dictionaries(st.integers(0, 10), small_fractions, max_size=6))
def test_integrate_then_differentiate(terms):
    p = UniPoly(Var.Y, terms)
    assert integrate_y(p).derivative() == p
    assert integrate_y(p)(0) == 0
