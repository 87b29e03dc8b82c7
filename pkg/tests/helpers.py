"""Shared test helpers: a sympy bridge for printed closed forms and
hypothesis strategies for random polynomials and strips."""
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from tristrip import BiPoly, Strip

x, y, a, b = sympy.symbols("x y a b")


def from_sympy(expr, **subs) -> BiPoly:
    """Expand ``expr`` (a string or sympy expression) after substituting the
    strip parameters, and convert to a BiPoly."""
    if isinstance(expr, str):
        expr = sympy.sympify(expr, locals={"x": x, "y": y, "a": a, "b": b})
    values = {sympy.Symbol(k): sympy.Rational(str(Fraction(v))) for k, v in subs.items()}
    expr = sympy.expand(expr.subs(values))
    poly = sympy.Poly(expr, x, y)
    terms = {}
    for (i, j), c in poly.terms():
        c = sympy.Rational(c)
        terms[(int(i), int(j))] = Fraction(int(c.p), int(c.q))
    return BiPoly(terms)


def to_sympy(p: BiPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * x**i * y**j
                for (i, j), c in p.terms.items()), sympy.Integer(0))


small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)


def bipolys(max_degree=8, max_terms=6, coeffs=small_fractions):
    key = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
        lambda k: k[0] + k[1] <= max_degree)
    return st.dictionaries(key, coeffs, max_size=max_terms).map(BiPoly)


def xpolys(max_degree=8, max_terms=5):
    return st.dictionaries(st.integers(0, max_degree), small_fractions, max_size=max_terms).map(
        lambda d: BiPoly({(i, 0): c for i, c in d.items()}))


def strips(bound=4):
    ends = st.builds(Fraction, st.integers(-4 * bound, 4 * bound), st.integers(1, 4)).filter(
        lambda f: abs(f) <= bound)
    return st.tuples(ends, ends).filter(lambda t: t[0] != t[1]).map(lambda t: Strip(min(t), max(t)))
