"""Recursive-descent parser for signed sums of monomials.

Used for algebra specs such as ``-3*Q0^2 - 3*Q0 + 2`` and for the text
form of differential operators such as ``z^3*D^2 - 2*z^2*D + 3/2*z``.

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := rational | symbol ["^" int]
    rational := int ["/" int]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import QuadraticAlgebraSpec
from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*|/|\+|-))")


@dataclass
class _Tok:
    kind: str   # "int", "sym", "op", "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            out.append(_Tok("sym", m.group(2), start))
        else:
            out.append(_Tok("op", m.group(3), start))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, symbols: tuple[str, ...], ordered: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.symbols = symbols
        self.ordered = ordered

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def expect_int(self) -> int:
        t = self.take()
        if t.kind != "int":
            self.error("expected an integer", t)
        return int(t.value)

    def expr(self) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = {}
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        while True:
            powers, coef = self.term()
            out[powers] = out.get(powers, Fraction(0)) + sign * coef
            t = self.peek()
            if t.kind == "end":
                break
            if t.kind == "op" and t.value in "+-":
                self.take()
                sign = -1 if t.value == "-" else 1
                continue
            self.error("expected '+', '-' or end of input")
        return {k: v for k, v in out.items() if v != 0}

    def term(self):
        coef = Fraction(1)
        powers = [0] * len(self.symbols)
        last_sym = -1
        while True:
            t = self.peek()
            if t.kind == "int":
                self.take()
                num = int(t.value)
                if self.peek().kind == "op" and self.peek().value == "/":
                    self.take()
                    den = self.expect_int()
                    if den == 0:
                        self.error("zero denominator")
                    coef *= Fraction(num, den)
                else:
                    coef *= num
            elif t.kind == "sym":
                self.take()
                if t.value not in self.symbols:
                    self.error(f"unknown symbol {t.value!r}", t)
                idx = self.symbols.index(t.value)
                if self.ordered and idx < last_sym:
                    self.error(f"{t.value!r} must precede "
                               f"{self.symbols[last_sym]!r} (normal order)", t)
                last_sym = max(last_sym, idx)
                power = 1
                if self.peek().kind == "op" and self.peek().value == "^":
                    self.take()
                    power = self.expect_int()
                powers[idx] += power
            else:
                self.error("expected a number or symbol")
            if self.peek().kind == "op" and self.peek().value == "*":
                self.take()
                continue
            return tuple(powers), coef


def parse_monomials(text: str, symbols: tuple[str, ...], ordered: bool = False
                    ) -> dict[tuple[int, ...], Fraction]:
    """Map from exponent tuples to summed exact coefficients."""
    if not text.strip():
        raise ParseError("empty expression", text, 0)
    return _Parser(text, symbols, ordered).expr()


def parse_spec(text: str) -> QuadraticAlgebraSpec:
    """Parse the right-hand side of [Q+, Q-], at most quadratic in Q0."""
    terms = parse_monomials(text, ("Q0",))
    coeffs = [Fraction(0)] * 3
    for (power,), c in terms.items():
        if power > 2:
            raise ParseError(f"Q0^{power} exceeds degree 2", text, 0)
        coeffs[power] += c
    return QuadraticAlgebraSpec(coeffs[2], coeffs[1], coeffs[0])


def format_spec(spec: QuadraticAlgebraSpec) -> str:
    return Polynomial([spec.c, spec.b, spec.a]).format("Q0")
