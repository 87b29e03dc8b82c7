from fractions import Fraction

import pytest
from hypothesis import given

from tristrip import BiPoly, monomial_inverse, particular_solution, tricomi_apply
from tristrip.polynomial import X, Y

from helpers import bipolys, from_sympy, small_fractions


def brute_force_inverse(n, m):
    """Independent oracle: undetermined coefficients on the shape
    sum_j c_j x^(n-2j) y^(m+3j+2), matched term by term."""
    terms = {}
    target = BiPoly.monomial(n, m)
    residual = target
    for j in range(n // 2 + 1):
        i, k = n - 2 * j, m + 3 * j
        # coefficient of x^i y^k left to cancel; only c_j y^(k+2) x^i produces it via u_yy
        need = residual.coeff(i, k)
        c = need / ((k + 2) * (k + 1))
        terms[(i, k + 2)] = c
        residual = target - tricomi_apply(BiPoly(terms))
    assert residual == 0
    return BiPoly(terms)


def test_paper_example_5_7():
    expected = BiPoly({(5, 9): Fraction(1, 72), (3, 12): Fraction(-5, 2376), (1, 15): Fraction(1, 16632)})
    assert monomial_inverse(5, 7) == expected


def test_constant_rhs():
    assert monomial_inverse(0, 0) == BiPoly.monomial(0, 2, Fraction(1, 2))


def test_2_3_against_oracle():
    oracle = brute_force_inverse(2, 3)
    assert tricomi_apply(oracle) == X**2 * Y**3
    # frozen from the oracle above
    assert oracle == BiPoly({(2, 5): Fraction(1, 20), (0, 8): Fraction(-1, 560)})
    assert monomial_inverse(2, 3) == oracle


@pytest.mark.parametrize("n", range(13))
@pytest.mark.parametrize("m", range(13))
def test_matches_brute_force(n, m):
    assert monomial_inverse(n, m) == brute_force_inverse(n, m)


def test_paper_rhs_example():
    rhs = 2 * X**2 * Y**3 - 18 * X**3 * Y**4
    expected = from_sympy("-3*x**3*y**6/5 + x**2*y**5/10 + x*y**9/20 - y**8/280")
    assert particular_solution(rhs) == expected


def test_zero_and_sum():
    assert particular_solution(BiPoly()) == 0
    rhs = X**5 * Y**7 + X**2 * Y**3
    u = particular_solution(rhs)
    assert u == monomial_inverse(5, 7) + monomial_inverse(2, 3)
    assert tricomi_apply(u) == rhs


@given(bipolys(), bipolys(), small_fractions, small_fractions)
def test_linearity(p, q, alpha, beta):
    lhs = particular_solution(alpha * p + beta * q)
    assert lhs == alpha * particular_solution(p) + beta * particular_solution(q)
    assert tricomi_apply(lhs) == alpha * p + beta * q


@pytest.mark.parametrize("n,m", [(n, m) for n in range(9) for m in range(9)])
def test_degree_shape(n, m):
    for (i, j) in monomial_inverse(n, m).terms:
        assert i % 2 == n % 2 and i <= n
        assert j % 3 == (m + 2) % 3 and j >= m + 2
