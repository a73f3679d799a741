"""Parsing and linear evaluation of polynomials in x1..xk.

Grammar (whitespace ignored)::

    polynomial := ['-'] term (('+' | '-') term)*
    term       := integer ['*' factor ('*' factor)*]
                | factor ('*' factor)*
    factor     := 'x' index ['^' ['-'] integer]

A bare integer is a constant term. The empty string (or only whitespace)
is the zero polynomial. Repeated variables in one term multiply, so their
exponents add. Like terms are kept separate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from unitsums.errors import PreconditionError
from unitsums.group import UnitSubgroup
from unitsums.ring import RingElement
from unitsums.symsum import Evaluation, evaluate


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Monomial:
    coefficient: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class MonomialPolynomial:
    arity: int
    terms: tuple[Monomial, ...]


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"(?P<int>\d+)|x(?P<var>\d+)|(?P<op>[-+*^])")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "op":
            kind = m.group("op")
        tokens.append(_Token(kind, m.group(m.lastgroup), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, arity: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.arity = arity

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> _Token:
        t = self.tok
        if t.kind != kind:
            want = {"int": "integer", "var": "variable"}.get(kind, repr(kind))
            got = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {want}, got {got}", t.pos)
        self.i += 1
        return t

    def polynomial(self) -> MonomialPolynomial:
        terms = []
        if self.tok.kind != "eof":
            sign = 1
            if self.tok.kind == "-":
                self.i += 1
                sign = -1
            terms.append(self.term(sign))
            while self.tok.kind in ("+", "-"):
                sign = 1 if self.take(self.tok.kind).kind == "+" else -1
                terms.append(self.term(sign))
            if self.tok.kind != "eof":
                raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return MonomialPolynomial(self.arity, tuple(terms))

    def term(self, sign: int) -> Monomial:
        exps = [0] * self.arity
        coeff = 1
        if self.tok.kind == "int":
            coeff = int(self.take("int").text)
            if self.tok.kind != "*":
                return Monomial(sign * coeff, tuple(exps))
            self.take("*")
        self.factor(exps)
        while self.tok.kind == "*":
            self.take("*")
            self.factor(exps)
        return Monomial(sign * coeff, tuple(exps))

    def factor(self, exps: list[int]) -> None:
        t = self.take("var")
        idx = int(t.text)
        if not 1 <= idx <= self.arity:
            raise ParseError(f"variable x{idx} out of range for arity {self.arity}", t.pos)
        e = 1
        if self.tok.kind == "^":
            self.take("^")
            neg = False
            if self.tok.kind == "-":
                self.take("-")
                neg = True
            e = int(self.take("int").text)
            e = -e if neg else e
        exps[idx - 1] += e


def parse(text: str, k: int) -> MonomialPolynomial:
    if k < 1:
        raise ValueError(f"arity must be positive, got {k}")
    return _Parser(text, k).polynomial()


def _format_term(t: Monomial) -> str:
    factors = []
    for i, e in enumerate(t.exponents, start=1):
        if e == 0:
            continue
        factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    c = abs(t.coefficient)
    if not factors:
        return str(c)
    body = "*".join(factors)
    return body if c == 1 else f"{c}*{body}"


def format_polynomial(f: MonomialPolynomial) -> str:
    """Text form that parses back to the same terms."""
    out = []
    for j, t in enumerate(f.terms):
        sign = "-" if t.coefficient < 0 else "+"
        if j == 0:
            out.append(("-" if sign == "-" else "") + _format_term(t))
        else:
            out.append(f" {sign} {_format_term(t)}")
    return "".join(out)


def eval_sum(G: UnitSubgroup, f: MonomialPolynomial) -> tuple[RingElement, list[Evaluation]]:
    """Sum of f over injective arity-tuples of G, term by term.

    Returns the total and each term's (uncoefficiented) evaluation.
    """
    if f.arity > G.order:
        raise PreconditionError(f"arity {f.arity} exceeds the group order {G.order}")
    total = G.ring.zero
    per_term = []
    for t in f.terms:
        ev = evaluate(G, t.exponents)
        per_term.append(ev)
        total = total + t.coefficient * ev.value
    return total, per_term
