"""Generating polynomials p_2m / q_2m and the monomial-data lifts u_n / v_n.

The polynomials are the Taylor coefficients, in ``t``, of the boundary
kernels of the Fourier-transformed problem ``U_yy = t^2 y U``. Matching
powers of ``t`` gives

    p_0'' = 0,        p_2m'' = -(2m)(2m-1) y p_2m-2    (m >= 1),

so each polynomial is a double antiderivative plus the affine term that
puts the right values on the two boundary lines.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .polynomial import BiPoly, Strip, UniPoly, Var, from_y_poly, integrate_y


class Side(str, Enum):
    LOWER = "lower"  # data x^n on y = lower, kernel K, p-family
    UPPER = "upper"  # data x^n on y = upper, kernel L, q-family

    @property
    def opposite(self) -> Side:
        return Side.UPPER if self is Side.LOWER else Side.LOWER


@dataclass(frozen=True)
class BasisFamily:
    strip: Strip
    side: Side
    polys: tuple[UniPoly, ...]

    def __getitem__(self, m: int) -> UniPoly:
        return self.polys[m]

    def __len__(self) -> int:
        return len(self.polys)


def _affine_fix(w: UniPoly, strip: Strip, at_lower: Fraction, at_upper: Fraction) -> UniPoly:
    a, b = strip.lower, strip.upper
    ra = at_lower - w(a)
    rb = at_upper - w(b)
    c1 = (rb - ra) / (b - a)
    c0 = ra - c1 * a
    return w + UniPoly(Var.Y, {0: c0, 1: c1})


def _next(prev: UniPoly, m: int, strip: Strip) -> UniPoly:
    rhs = prev.shift(1) * (-(2 * m) * (2 * m - 1))
    w = integrate_y(integrate_y(rhs))
    return _affine_fix(w, strip, Fraction(0), Fraction(0))


def _first(strip: Strip, side: Side) -> UniPoly:
    ends = (Fraction(1), Fraction(0)) if side is Side.LOWER else (Fraction(0), Fraction(1))
    return _affine_fix(UniPoly(Var.Y), strip, *ends)


_cache: dict[tuple[Strip, Side], list[UniPoly]] = {}
_cache_lock = threading.Lock()


def build_family(strip: Strip, side: Side | str, M: int) -> BasisFamily:
    """The first ``M + 1`` polynomials of the family for ``strip`` and ``side``."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    side = Side(side)
    with _cache_lock:
        polys = list(_cache.get((strip, side), ()))
    if not polys:
        polys.append(_first(strip, side))
    while len(polys) <= M:
        polys.append(_next(polys[-1], len(polys), strip))
    with _cache_lock:
        known = _cache.get((strip, side), [])
        if len(polys) > len(known):
            _cache[(strip, side)] = polys
    return BasisFamily(strip, side, tuple(polys[: M + 1]))


def lift_from_family(family: BasisFamily, n: int) -> BiPoly:
    out = BiPoly()
    for m in range(n // 2 + 1):
        out = out + from_y_poly(family[m], n - 2 * m, comb(n, 2 * m))
    return out


def harmonic_lift(strip: Strip, side: Side | str, n: int) -> BiPoly:
    """Solution of the homogeneous equation with data x^n on one line, 0 on the other.

    u_n(x, y) = sum_m C(n, 2m) x^(n-2m) p_2m(y)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return lift_from_family(build_family(strip, side, n // 2), n)


def reflect_family(family: BasisFamily) -> BasisFamily:
    """Swap p and q on a symmetric strip by replacing the half-width a with -a.

    Each p_2m(y, a) is homogeneous of degree 3m in (y, a), so
    p_2m(y, -a) = (-1)^m p_2m(-y, a).
    """
    if not family.strip.symmetric:
        raise ValueError("reflect_family requires a symmetric strip (-a, a)")
    polys = []
    for m, p in enumerate(family.polys):
        sign = -1 if m % 2 else 1
        polys.append(UniPoly(Var.Y, {d: sign * (-1) ** d * c for d, c in p.terms.items()}))
    return BasisFamily(family.strip, family.side.opposite, tuple(polys))
