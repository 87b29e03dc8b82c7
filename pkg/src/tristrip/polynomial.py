"""Exact polynomial arithmetic in x and y over the rationals.

Coefficients are :class:`fractions.Fraction` everywhere; a polynomial is a
sparse map from exponent pairs to nonzero coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


class Var(str, Enum):
    X = "x"
    Y = "y"


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _clean(terms: Mapping) -> dict:
    out = {}
    for key, coeff in terms.items():
        c = as_fraction(coeff)
        if c:
            out[key] = c
    return out


def grlex_key(exps: tuple[int, int]) -> tuple[int, int]:
    """Sort key: higher total degree first, then higher power of x."""
    i, j = exps
    return (-(i + j), -i)


class BiPoly:
    """Immutable bivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        cleaned = {}
        for (i, j), c in _clean(terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term x^{i} y^{j}")
            cleaned[(int(i), int(j))] = c
        self._terms = cleaned
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms in graded-lex display order."""
        for k in sorted(self._terms, key=grlex_key):
            yield k, self._terms[k]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def degree_in(self, var: Var) -> int:
        idx = 0 if Var(var) is Var.X else 1
        return max((k[idx] for k in self._terms), default=-1)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return other.to_bipoly()
        return BiPoly.const(as_fraction(other))

    def __add__(self, other) -> BiPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if not isinstance(other, (BiPoly, UniPoly)):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            return BiPoly({k: v * c for k, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BiPoly:
        c = as_fraction(other)
        return BiPoly({k: v / c for k, v in self._terms.items()})

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, UniPoly):
            return self == other.to_bipoly()
        try:
            return self._terms == BiPoly.const(as_fraction(other))._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .expr_io import format_bipoly

        return f"BiPoly({format_bipoly(self)!r})"


class UniPoly:
    """Immutable univariate polynomial in ``x`` or ``y``."""

    __slots__ = ("var", "_terms")

    def __init__(self, var: Var | str, terms: Mapping[int, Scalar] | Iterable[Scalar] | None = None):
        self.var = Var(var)
        if terms is None:
            terms = {}
        elif not isinstance(terms, Mapping):
            terms = dict(enumerate(terms))
        cleaned = _clean(terms)
        if any(d < 0 for d in cleaned):
            raise ValueError("negative degree")
        self._terms = {int(d): c for d, c in cleaned.items()}

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, d: int) -> Fraction:
        return self._terms.get(d, Fraction(0))

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __call__(self, t: Scalar) -> Fraction:
        t = as_fraction(t)
        acc = Fraction(0)
        for d in range(self.degree(), -1, -1):
            acc = acc * t + self._terms.get(d, 0)
        return acc

    def _same_var(self, other: UniPoly) -> None:
        if other.var is not self.var and other and self:
            raise ValueError(f"variable mismatch: {self.var.value} vs {other.var.value}")

    def __add__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            other = UniPoly(self.var, {0: as_fraction(other)})
        self._same_var(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, 0) + c
        return UniPoly(self.var, out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(self.var, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            other = UniPoly(self.var, {0: as_fraction(other)})
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly(self.var, {d: v * c for d, v in self._terms.items()})
        self._same_var(other)
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        """Multiply by ``var**k``."""
        return UniPoly(self.var, {d + k: c for d, c in self._terms.items()})

    def derivative(self, order: int = 1) -> UniPoly:
        out = {}
        for d, c in self._terms.items():
            if d >= order:
                f = 1
                for r in range(d - order + 1, d + 1):
                    f *= r
                out[d - order] = c * f
        return UniPoly(self.var, out)

    def to_bipoly(self) -> BiPoly:
        if self.var is Var.X:
            return BiPoly({(d, 0): c for d, c in self._terms.items()})
        return BiPoly({(0, d): c for d, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            if not self._terms and not other._terms:
                return True
            return self.var is other.var and self._terms == other._terms
        if isinstance(other, BiPoly):
            return self.to_bipoly() == other
        try:
            return self.to_bipoly() == BiPoly.const(as_fraction(other))
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_bipoly())

    def __repr__(self) -> str:
        from .expr_io import format_bipoly

        return f"UniPoly({self.var.value}, {format_bipoly(self.to_bipoly())!r})"


@dataclass(frozen=True)
class Strip:
    """The open strip ``lower < y < upper``."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower", as_fraction(self.lower))
        object.__setattr__(self, "upper", as_fraction(self.upper))
        if not self.lower < self.upper:
            raise ValueError(f"invalid strip: need lower < upper, got {self.lower} >= {self.upper}")

    def classification(self) -> str:
        if self.lower >= 0:
            return "elliptic"
        if self.upper <= 0:
            return "hyperbolic"
        return "mixed"

    @property
    def symmetric(self) -> bool:
        return self.lower == -self.upper


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def _falling(d: int, order: int) -> int:
    f = 1
    for r in range(d - order + 1, d + 1):
        f *= r
    return f


def diff(p: BiPoly, var: Var | str, order: int = 1) -> BiPoly:
    """Partial derivative of ``p`` of the given order."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    wrt_x = Var(var) is Var.X
    out = {}
    for (i, j), c in p._terms.items():
        d = i if wrt_x else j
        if d < order:
            continue
        key = (i - order, j) if wrt_x else (i, j - order)
        out[key] = c * _falling(d, order)
    return BiPoly(out)


def integrate_y(p: UniPoly) -> UniPoly:
    """Antiderivative in y with zero constant term."""
    if p and p.var is not Var.Y:
        raise ValueError("integrate_y expects a polynomial in y")
    return UniPoly(Var.Y, {d + 1: c / (d + 1) for d, c in p.terms.items()})


def tricomi_apply(u: BiPoly) -> BiPoly:
    """The Tricomi operator ``y*u_xx + u_yy``."""
    return Y * diff(u, Var.X, 2) + diff(u, Var.Y, 2)


def eval_poly(p: BiPoly, x0: Scalar, y0: Scalar) -> Fraction:
    """Exact value of ``p`` at ``(x0, y0)``."""
    x0, y0 = as_fraction(x0), as_fraction(y0)
    return sum((c * x0**i * y0**j for (i, j), c in p._terms.items()), Fraction(0))


def substitute_y(p: BiPoly, y0: Scalar) -> UniPoly:
    """Restriction of ``p`` to the line ``y = y0`` as a polynomial in x."""
    y0 = as_fraction(y0)
    out: dict[int, Fraction] = {}
    for (i, j), c in p._terms.items():
        out[i] = out.get(i, 0) + c * y0**j
    return UniPoly(Var.X, out)


def from_y_poly(p: UniPoly, x_power: int = 0, scale: Scalar = 1) -> BiPoly:
    """Embed ``scale * x**x_power * p(y)`` as a bivariate polynomial."""
    scale = as_fraction(scale)
    return BiPoly({(x_power, d): c * scale for d, c in p.terms.items()})
