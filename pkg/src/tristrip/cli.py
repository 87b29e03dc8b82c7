"""Command-line front end: ``tristrip solve|particular|basis|verify|eigen|sample``.

Exit codes: 0 ok, 2 parse error, 3 invalid strip or grid, 4 numeric range,
5 a computed solution failed its own verification.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import airy
from .basis import Side, build_family, harmonic_lift
from .expr_io import ParseError, Style, format_bipoly, from_json_obj, parse_bipoly, parse_rational, to_json_obj
from .particular import particular_solution
from .polynomial import BiPoly, Strip, eval_poly, tricomi_apply
from .solver import DirichletProblem, SolutionReport, solve, verify

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_RANGE, EXIT_INTERNAL = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# input helpers ---------------------------------------------------------------

def _read_source(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    if value == "-":
        return sys.stdin.read()
    return value


def read_poly(value: str, input_format: str, flag: str) -> BiPoly:
    text = _read_source(value)
    try:
        if input_format == "json":
            return from_json_obj(json.loads(text))
        return parse_bipoly(text)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"{flag}: {exc}") from exc
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{flag}: {exc}") from exc


def read_rational(value: str, flag: str) -> Fraction:
    try:
        return parse_rational(value)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"{flag}: not a rational number: {value!r}") from exc


def make_strip(a: str | None, b: str | None) -> Strip:
    if a is None or b is None:
        raise CliError(EXIT_DOMAIN, "both --a and --b are required")
    lower, upper = read_rational(a, "--a"), read_rational(b, "--b")
    try:
        return Strip(lower, upper)
    except ValueError as exc:
        raise CliError(EXIT_DOMAIN, str(exc)) from exc


def make_problem(args) -> DirichletProblem:
    strip = make_strip(args.a, args.b)
    rhs = read_poly(args.rhs, args.input, "--rhs")
    phi = read_poly(args.phi, args.input, "--phi")
    psi = read_poly(args.psi, args.input, "--psi")
    try:
        return DirichletProblem(rhs, phi, psi, strip)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc


# output helpers --------------------------------------------------------------

def _strip_obj(strip: Strip) -> dict:
    return {"lower": str(strip.lower), "upper": str(strip.upper), "type": strip.classification()}


def report_obj(report: SolutionReport, strip: Strip | None) -> dict:
    doc = {
        "solution": to_json_obj(report.solution),
        "particular_part": to_json_obj(report.particular_part),
        "homogeneous_part": to_json_obj(report.homogeneous_part),
        "residuals": {
            "pde": to_json_obj(report.pde_residual),
            "lower": to_json_obj(report.lower_residual),
            "upper": to_json_obj(report.upper_residual),
        },
        "verified": report.verified,
    }
    if strip is not None:
        doc = {"strip": _strip_obj(strip), **doc}
    return doc


def emit_report(report: SolutionReport, strip: Strip, style: Style, out) -> None:
    if style is Style.JSON:
        json.dump(report_obj(report, strip), out)
        out.write("\n")
        return
    lines = [
        f"strip: {strip.lower} < y < {strip.upper} ({strip.classification()})",
        f"u = {format_bipoly(report.solution, style)}",
        f"particular = {format_bipoly(report.particular_part, style)}",
        f"homogeneous = {format_bipoly(report.homogeneous_part, style)}",
        f"pde_residual = {format_bipoly(report.pde_residual, style)}",
        f"lower_residual = {format_bipoly(report.lower_residual, style)}",
        f"upper_residual = {format_bipoly(report.upper_residual, style)}",
    ]
    out.write("\n".join(lines) + "\n")


# commands --------------------------------------------------------------------

def cmd_solve(args, out) -> int:
    problem = make_problem(args)
    report = solve(problem)
    if not report.verified:
        raise CliError(EXIT_INTERNAL, "internal error: solution failed self-verification")
    emit_report(report, problem.strip, Style(args.format), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    problem = make_problem(args)
    candidate = read_poly(args.candidate, args.input, "--candidate")
    emit_report(verify(problem, candidate), problem.strip, Style(args.format), out)
    return EXIT_OK


def cmd_particular(args, out) -> int:
    rhs = read_poly(args.rhs, args.input, "--rhs")
    u = particular_solution(rhs)
    residual = tricomi_apply(u) - rhs
    if residual:
        raise CliError(EXIT_INTERNAL, "internal error: particular solution failed verification")
    style = Style(args.format)
    if style is Style.JSON:
        json.dump({"solution": to_json_obj(u), "residual": to_json_obj(residual)}, out)
        out.write("\n")
    else:
        out.write(f"u = {format_bipoly(u, style)}\nresidual = {format_bipoly(residual, style)}\n")
    return EXIT_OK


def cmd_basis(args, out) -> int:
    strip = make_strip(args.a, args.b)
    if args.count < 1:
        raise CliError(EXIT_DOMAIN, "--count must be at least 1")
    side = Side(args.side)
    family = build_family(strip, side, args.count - 1)
    letter, lift_letter = ("p", "u") if side is Side.LOWER else ("q", "v")
    style = Style(args.format)
    polys = [(f"{letter}_{2 * m}", family[m]) for m in range(args.count)]
    lifts = []
    if args.lift:
        lifts = [(f"{lift_letter}_{n}", harmonic_lift(strip, side, n)) for n in range(args.count)]
    if style is Style.JSON:
        doc = {
            "strip": _strip_obj(strip),
            "side": side.value,
            "polynomials": [{"name": k, **to_json_obj(p)} for k, p in polys],
        }
        if args.lift:
            doc["lifts"] = [{"name": k, **to_json_obj(p)} for k, p in lifts]
        json.dump(doc, out)
        out.write("\n")
    else:
        for name, p in polys + lifts:
            out.write(f"{name} = {format_bipoly(p, style)}\n")
    return EXIT_OK


def _eigenvalues(a: float, count: int):
    if not a > 0:
        raise CliError(EXIT_DOMAIN, "--a must be positive")
    if count < 1:
        raise CliError(EXIT_DOMAIN, "--count must be at least 1")
    try:
        return airy.find_eigenvalues(a, count)
    except airy.AiryRangeError as exc:
        raise CliError(EXIT_RANGE, str(exc)) from exc


def cmd_eigen(args, out) -> int:
    roots = _eigenvalues(args.a, args.count)
    if Style(args.format) is Style.JSON:
        doc = {
            "half_width": args.a,
            "eigenvalues": [{"k": k, "mu": e.mu, "residual": e.residual} for k, e in enumerate(roots, 1)],
        }
        json.dump(doc, out)
        out.write("\n")
    else:
        for k, e in enumerate(roots, 1):
            out.write(f"mu_{k} = {e.mu:.12f}  residual = {e.residual:.3e}\n")
    return EXIT_OK


def _axis(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def cmd_sample(args, out) -> int:
    bounds = [read_rational(getattr(args, f), f"--{f.replace('_', '-')}")
              for f in ("x_min", "x_max", "y_min", "y_max")]
    try:
        grid = airy.GridSpec(*(float(v) for v in bounds), args.nx, args.ny)
    except ValueError as exc:
        raise CliError(EXIT_DOMAIN, f"invalid grid: {exc}") from exc
    xs, ys = _axis(bounds[0], bounds[1], args.nx), _axis(bounds[2], bounds[3], args.ny)

    poly = BiPoly()
    if args.solution is not None:
        poly = read_poly(args.solution, args.input, "--solution")
    elif args.rhs is not None:
        problem = make_problem(args)
        report = solve(problem)
        if not report.verified:
            raise CliError(EXIT_INTERNAL, "internal error: solution failed self-verification")
        poly = report.solution

    mode_values = None
    if args.mode is not None:
        if args.mode_a is None:
            raise CliError(EXIT_DOMAIN, "--mode needs --mode-a (strip half-width)")
        half = float(read_rational(args.mode_a, "--mode-a"))
        mu = _eigenvalues(half, args.mode)[-1].mu
        mode = airy.Eigenmode(mu, half, args.mode_c1, args.mode_c2)
        try:
            mode_values = airy.eigenmode_grid(mode, [float(x) for x in xs], [float(y) for y in ys])
        except airy.AiryRangeError as exc:
            raise CliError(EXIT_RANGE, str(exc)) from exc
        except ValueError as exc:
            raise CliError(EXIT_DOMAIN, f"invalid grid: {exc}") from exc

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "y", "u"])
    for iy, y in enumerate(ys):
        for ix, x in enumerate(xs):
            exact = eval_poly(poly, x, y)
            if mode_values is not None:
                value = repr(float(exact) + float(mode_values[iy, ix]))
            elif args.exact:
                value = str(exact)
            else:
                value = repr(float(exact))
            writer.writerow([repr(float(x)), repr(float(y)), value])
    return EXIT_OK


# parser ----------------------------------------------------------------------

def _add_format(p, json_ok=True):
    choices = [s.value for s in Style] if json_ok else ["text", "latex"]
    p.add_argument("--format", choices=choices, default="text", help="output style")


def _add_input(p):
    p.add_argument("--input", choices=["text", "json"], default="text",
                   help="how polynomial arguments are read (values may be @file or -)")


def _add_problem(p, required=True):
    p.add_argument("--rhs", required=required, help="right-hand side P(x, y)")
    p.add_argument("--phi", default="0", help="data on the lower line y = a")
    p.add_argument("--psi", default="0", help="data on the upper line y = b")
    p.add_argument("--a", required=required, help="lower edge of the strip (rational, e.g. -1/2)")
    p.add_argument("--b", required=required, help="upper edge of the strip")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tristrip",
        description="Exact polynomial solutions of y*u_xx + u_yy = P on a strip a < y < b.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the Dirichlet problem exactly")
    _add_problem(p)
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="residuals of a candidate solution")
    _add_problem(p)
    p.add_argument("--candidate", required=True)
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("particular", help="a polynomial particular solution")
    p.add_argument("--rhs", required=True)
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_particular)

    p = sub.add_parser("basis", help="generating polynomials p_2m or q_2m of a strip")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--side", choices=["lower", "upper"], default="lower")
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--lift", action="store_true", help="also print u_n / v_n for n < count")
    _add_format(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("eigen", help="roots mu_k of Ai(-mu a)Bi(mu a) - Ai(mu a)Bi(-mu a)")
    p.add_argument("--a", type=float, default=1.0, help="half-width of the strip (-a, a)")
    p.add_argument("--count", type=int, default=5)
    _add_format(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("sample", help="CSV samples x,y,u of a solution and/or eigenmode")
    p.add_argument("--solution", help="polynomial to sample directly")
    _add_problem(p, required=False)
    _add_input(p)
    p.add_argument("--mode", type=int, help="add the eigenmode of the k-th root")
    p.add_argument("--mode-a", help="half-width of the symmetric strip for --mode")
    p.add_argument("--mode-c1", type=float, default=0.0, help="sine coefficient")
    p.add_argument("--mode-c2", type=float, default=1.0, help="cosine coefficient")
    p.add_argument("--x-min", default="-1")
    p.add_argument("--x-max", default="1")
    p.add_argument("--y-min", default="0")
    p.add_argument("--y-max", default="1")
    p.add_argument("--nx", type=int, default=11)
    p.add_argument("--ny", type=int, default=11)
    p.add_argument("--exact", action="store_true", help="print u as exact rationals")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_sample)
    return parser


_FLAG_WITH_VALUE = {"--rhs", "--phi", "--psi", "--a", "--b", "--candidate", "--solution",
                    "--mode-a", "--x-min", "--x-max", "--y-min", "--y-max"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "-1/2" or "-x^2" as an option name
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _FLAG_WITH_VALUE and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1] != "-" and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    out = sys.stdout
    handle = None
    if getattr(args, "out", None):
        handle = out = open(args.out, "w", newline="")
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"tristrip: {exc}", file=sys.stderr)
        return exc.code
    finally:
        if handle is not None:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
