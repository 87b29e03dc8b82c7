"""Reading and writing polynomials: plain text, LaTeX and JSON.

Accepted text grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := rational | var pow? | '(' expr ')' pow?
    var    := 'x' | 'y'
    pow    := '^' nonneg-int
    rational := int ('/' posint)?

Adjacent factors multiply, so ``2x^2y^3`` is a monomial. Division only
appears inside a rational literal: ``1/72 x^5`` parses, ``x^5/72`` does not.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .polynomial import BiPoly, UniPoly


class Style(str, Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a byte offset into the input."""

    def __init__(self, position: int, expected: str, found: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        self.text = text
        super().__init__(f"at offset {position}: expected {expected}, found {found}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT, VAR, OP, END
    value: str
    pos: int


_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("INT", text[i:j], i))
            i = j
        elif ch in "xy":
            toks.append(_Tok("VAR", ch, i))
            i += 1
        elif ch in _OPS or ch == "−":
            toks.append(_Tok("OP", "-" if ch == "−" else ch, i))
            i += 1
        else:
            raise ParseError(_byte_offset(text, i), "a number, x, y or operator", repr(ch), text)
    toks.append(_Tok("END", "", n))
    return toks


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _describe(tok: _Tok) -> str:
    return "end of input" if tok.kind == "END" else repr(tok.value)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.k]

    def error(self, expected: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(_byte_offset(self.text, tok.pos), expected, _describe(tok), self.text)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "OP" and self.tok.value == op:
            self.k += 1
            return True
        return False

    def expect_int(self, what: str) -> tuple[int, _Tok]:
        tok = self.tok
        if tok.kind != "INT":
            raise self.error(what)
        self.k += 1
        return int(tok.value), tok

    def parse(self) -> BiPoly:
        p = self.expr()
        if self.tok.kind != "END":
            raise self.error("an operator or end of input")
        return p

    def expr(self) -> BiPoly:
        negate = self.accept("-")
        p = self.term()
        if negate:
            p = -p
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("INT", "VAR") or (t.kind == "OP" and t.value == "(")

    def term(self) -> BiPoly:
        p = self.factor()
        while True:
            if self.accept("*"):
                p = p * self.factor()
            elif self._starts_factor():
                p = p * self.factor()
            else:
                return p

    def power(self) -> int:
        if self.accept("^"):
            return self.expect_int("a nonnegative integer exponent")[0]
        return 1

    def factor(self) -> BiPoly:
        tok = self.tok
        if tok.kind == "INT":
            self.k += 1
            num = int(tok.value)
            if self.accept("/"):
                den, den_tok = self.expect_int("a positive integer denominator")
                if den == 0:
                    raise self.error("a positive integer denominator", den_tok)
                return BiPoly.const(Fraction(num, den))
            return BiPoly.const(num)
        if tok.kind == "VAR":
            self.k += 1
            e = self.power()
            return BiPoly.monomial(e, 0) if tok.value == "x" else BiPoly.monomial(0, e)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                raise self.error("')'")
            return inner ** self.power()
        raise self.error("a number, x, y or '('")


def parse_bipoly(text: str) -> BiPoly:
    """Parse polynomial text into a canonical :class:`BiPoly`."""
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a decimal literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(0, "a rational number like -3/2", repr(text), text) from None


# ---------------------------------------------------------------------------
# output

def _mono_text(i: int, j: int, sep: str = " ", latex: bool = False) -> str:
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{{{e}}}" if latex else f"{var}^{e}")
    return sep.join(parts)


def _abs_coeff_text(c: Fraction, latex: bool) -> str:
    c = abs(c)
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _signed_join(p: BiPoly, latex: bool) -> str:
    if isinstance(p, UniPoly):
        p = p.to_bipoly()
    if not p:
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(p.items()):
        mono = _mono_text(i, j, latex=latex)
        coeff = _abs_coeff_text(c, latex)
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{coeff} {mono}"
        else:
            body = coeff
        if k == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)


def to_json_obj(p: BiPoly | UniPoly) -> dict[str, Any]:
    if isinstance(p, UniPoly):
        p = p.to_bipoly()
    return {
        "terms": [
            {"x": i, "y": j, "num": str(c.numerator), "den": str(c.denominator)}
            for (i, j), c in p.items()
        ]
    }


def format_bipoly(p: BiPoly | UniPoly, style: Style | str = Style.TEXT) -> str:
    style = Style(style)
    if style is Style.JSON:
        return json.dumps(to_json_obj(p))
    return _signed_join(p, latex=style is Style.LATEX)


def from_json_obj(doc: Any) -> BiPoly:
    """Read the ``{"terms": [...]}`` wire format.

    A document with a ``"solution"`` member (as printed by ``solve`` and
    ``particular``) yields that solution.
    """
    if isinstance(doc, dict) and "terms" not in doc and "solution" in doc:
        doc = doc["solution"]
    if not isinstance(doc, dict) or not isinstance(doc.get("terms"), list):
        raise ValueError('expected a JSON object with a "terms" list')
    terms: dict[tuple[int, int], Fraction] = {}
    for t in doc["terms"]:
        try:
            i, j = int(t["x"]), int(t["y"])
            c = Fraction(int(t["num"]), int(t["den"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed term {t!r}") from exc
        if int(t["den"]) <= 0:
            raise ValueError(f"denominator must be positive in {t!r}")
        terms[(i, j)] = terms.get((i, j), 0) + c
    return BiPoly(terms)


def parse_json(text: str) -> BiPoly:
    return from_json_obj(json.loads(text))
