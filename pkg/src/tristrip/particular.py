"""Polynomial particular solutions of ``y*u_xx + u_yy = P``."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .polynomial import BiPoly


@lru_cache(maxsize=None)
def monomial_inverse(n: int, m: int) -> BiPoly:
    """A polynomial ``u`` with ``y*u_xx + u_yy = x**n * y**m``.

    u = sum_{j=0}^{n//2} (-1)^j n! m! prod_{k=1}^{j}(m+3k)
                        / ((m+3j+2)! (n-2j)!)  * x^(n-2j) y^(m+3j+2)

    The product ``m! * prod_{k=1}^{j}(m+3k)`` keeps the m = 0 case defined.
    """
    if n < 0 or m < 0:
        raise ValueError("exponents must be nonnegative")
    terms = {}
    prod = 1
    for j in range(n // 2 + 1):
        if j:
            prod *= m + 3 * j
        num = factorial(n) * factorial(m) * prod
        den = factorial(m + 3 * j + 2) * factorial(n - 2 * j)
        terms[(n - 2 * j, m + 3 * j + 2)] = Fraction((-1) ** j * num, den)
    return BiPoly(terms)


def particular_solution(rhs: BiPoly) -> BiPoly:
    """Extend :func:`monomial_inverse` linearly over the terms of ``rhs``."""
    out = BiPoly()
    for (n, m), c in rhs.items():
        out = out + monomial_inverse(n, m) * c
    return out
