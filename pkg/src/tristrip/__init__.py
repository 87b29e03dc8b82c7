"""Exact polynomial solutions of the Dirichlet problem for the Tricomi
equation ``y*u_xx + u_yy = P(x, y)`` in a strip ``a < y < b``."""
from .basis import BasisFamily, Side, build_family, harmonic_lift, reflect_family
from .expr_io import ParseError, Style, format_bipoly, parse_bipoly, parse_json
from .particular import monomial_inverse, particular_solution
from .polynomial import (BiPoly, Strip, UniPoly, Var, add, diff, eval_poly, integrate_y, mul,
                         substitute_y, tricomi_apply)
from .solver import DirichletProblem, SolutionReport, kernel_dimension, solve, verify

__all__ = [
    "BasisFamily", "BiPoly", "DirichletProblem", "ParseError", "Side", "SolutionReport", "Strip",
    "Style", "UniPoly", "Var", "add", "build_family", "diff", "eval_poly", "format_bipoly",
    "harmonic_lift", "integrate_y", "kernel_dimension", "monomial_inverse", "mul", "parse_bipoly",
    "parse_json", "particular_solution", "reflect_family", "solve", "substitute_y",
    "tricomi_apply", "verify",
]
