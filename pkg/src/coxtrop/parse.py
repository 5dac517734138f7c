"""Recursive-descent parser for Laurent expressions in ``t``.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*'? 't' ('^' int)?)? | 't' ('^' int)?
    coeff  := int ('/' posint)?
    int    := '-'? digits
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .laurent import LaurentPoly, Rational


class LaurentSyntaxError(ValueError):
    """Malformed Laurent expression; ``position`` is a 0-based offset into the input."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        # (char, original offset) with whitespace dropped
        self.toks = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0] if self.i < len(self.toks) else ""

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def error(self, message: str):
        raise LaurentSyntaxError(message, self.text, self.pos())

    def take(self) -> str:
        ch = self.peek()
        self.i += 1
        return ch

    def digits(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if self.i == start:
            self.error("expected digits")
        return int("".join(ch for ch, _ in self.toks[start:self.i]))

    def integer(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        return sign * self.digits()

    def coeff(self) -> Rational:
        num = self.integer()
        if self.peek() == "/":
            self.take()
            at = self.pos()
            den = self.digits()
            if den == 0:
                raise LaurentSyntaxError("zero denominator in rational literal", self.text, at)
            return Fraction(num, den)
        return num

    def power_of_t(self) -> int:
        if self.peek() != "t":
            self.error("expected 't'")
        self.take()
        if self.peek() == "^":
            self.take()
            return self.integer()
        return 1

    def term(self, sign: int, acc: Dict[int, Rational]) -> None:
        ch = self.peek()
        if ch == "t":
            e, c = self.power_of_t(), 1
        elif ch.isdigit() or ch == "-":
            c = self.coeff()
            e = 0
            if self.peek() == "*":
                self.take()
                e = self.power_of_t()
            elif self.peek() == "t":
                e = self.power_of_t()
        else:
            self.error("expected a term")
        acc[e] = acc.get(e, 0) + sign * c

    def expr(self) -> LaurentPoly:
        acc: Dict[int, Rational] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            # a leading '-' directly before digits belongs to the integer literal
            if self.peek() == "+" or (self.i + 1 < len(self.toks) and self.toks[self.i + 1][0] == "t"):
                sign = -1 if self.take() == "-" else 1
        self.term(sign, acc)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            self.term(sign, acc)
        if self.i != len(self.toks):
            self.error("unexpected character")
        return LaurentPoly(acc)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse ``text`` into a :class:`LaurentPoly`.

    >>> str(parse_laurent("2*t^-1 + 1/3"))
    '2*t^-1 + 1/3'
    """
    if not isinstance(text, str):
        raise TypeError("expected a string")
    p = _Parser(text)
    if not p.toks:
        p.error("empty expression")
    return p.expr()
