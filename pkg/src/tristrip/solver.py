"""Dirichlet problem for ``y*u_xx + u_yy = P`` on a strip, solved exactly."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .basis import Side, build_family, lift_from_family
from .particular import particular_solution
from .polynomial import BiPoly, Strip, UniPoly, Var, substitute_y, tricomi_apply


@dataclass(frozen=True)
class DirichletProblem:
    rhs: BiPoly
    lower_data: UniPoly
    upper_data: UniPoly
    strip: Strip

    def __post_init__(self):
        for name in ("lower_data", "upper_data"):
            data = getattr(self, name)
            if isinstance(data, BiPoly):
                data = _as_x_poly(data, name)
                object.__setattr__(self, name, data)
            elif data and data.var is not Var.X:
                raise ValueError(f"{name} must be a polynomial in x")


def _as_x_poly(p: BiPoly, name: str) -> UniPoly:
    if p.degree_in(Var.Y) > 0:
        raise ValueError(f"{name} must not depend on y")
    return UniPoly(Var.X, {i: c for (i, _), c in p.terms.items()})


@dataclass(frozen=True)
class SolutionReport:
    solution: BiPoly
    particular_part: BiPoly
    homogeneous_part: BiPoly
    pde_residual: BiPoly
    lower_residual: UniPoly
    upper_residual: UniPoly
    problem: DirichletProblem | None = field(default=None, compare=False)

    @property
    def verified(self) -> bool:
        return not (self.pde_residual or self.lower_residual or self.upper_residual)


def _residuals(problem: DirichletProblem, u: BiPoly):
    pde = tricomi_apply(u) - problem.rhs
    lo = substitute_y(u, problem.strip.lower) - problem.lower_data
    hi = substitute_y(u, problem.strip.upper) - problem.upper_data
    return pde, lo, hi


def _lift_boundary(data: UniPoly, strip: Strip, side: Side) -> BiPoly:
    if not data:
        return BiPoly()
    family = build_family(strip, side, data.degree() // 2)
    out = BiPoly()
    for n, c in data.terms.items():
        out = out + lift_from_family(family, n) * c
    return out


def solve(problem: DirichletProblem) -> SolutionReport:
    """Particular solution plus lifts of the corrected boundary data."""
    strip = problem.strip
    u_part = particular_solution(problem.rhs)
    phi = problem.lower_data - substitute_y(u_part, strip.lower)
    psi = problem.upper_data - substitute_y(u_part, strip.upper)
    v = _lift_boundary(phi, strip, Side.LOWER) + _lift_boundary(psi, strip, Side.UPPER)
    u = u_part + v
    pde, lo, hi = _residuals(problem, u)
    return SolutionReport(u, u_part, v, pde, lo, hi, problem)


def verify(problem: DirichletProblem, candidate: BiPoly) -> SolutionReport:
    """Residuals of an arbitrary candidate; nothing is required to vanish."""
    pde, lo, hi = _residuals(problem, candidate)
    return SolutionReport(candidate, BiPoly(), candidate, pde, lo, hi, problem)


def rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse rational matrix by Gaussian elimination."""
    pivots: dict[int, dict[int, Fraction]] = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                r += 1
                break
            f = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def kernel_dimension(strip: Strip, max_degree: int) -> int:
    """Dimension of {P : deg P <= max_degree, T P = 0, P = 0 on both lines}."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    monomials = [(i, d - i) for d in range(max_degree + 1) for i in range(d + 1)]
    equations: dict[tuple, dict[int, Fraction]] = {}
    for col, (i, j) in enumerate(monomials):
        mono = BiPoly.monomial(i, j)
        images = [("T", k, c) for k, c in tricomi_apply(mono).terms.items()]
        for tag, y0 in (("lo", strip.lower), ("hi", strip.upper)):
            images += [(tag, d, c) for d, c in substitute_y(mono, y0).terms.items()]
        for tag, key, c in images:
            equations.setdefault((tag, key), {})[col] = c
    return len(monomials) - rank(list(equations.values()))
