"""Recursive-descent parser for polynomial text.

Grammar (usual precedence, ``^`` binds tightest)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | NAME | '(' expr ')'

``**`` is accepted as a synonym for ``^``.  Division is only allowed by a
nonzero constant, so rational coefficients can be written ``1/2*x``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .poly import DEFAULT_VARIABLES, Polynomial, default_variables

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "op" and value == "**":
            value = "^"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self):
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", pos)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                c = _constant_value(q)
                if c is None:
                    raise ParseError("division only by a constant", pos)
                if c == 0:
                    raise ParseError("division by zero", pos)
                p = p.scalar_mul(1 / c)
        return p

    def unary(self):
        kind, v, _ = self.peek()
        if kind == "op" and v in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if v == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            kind, v, pos = self.take()
            if kind != "num" or "." in v:
                raise ParseError("exponent must be a non-negative integer literal", pos)
            p = p ** int(v)
        return p

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Polynomial.constant(self.nvars, Fraction(v))
        if kind == "name":
            if v not in self.index:
                raise ParseError(f"unknown variable {v!r}", pos)
            return Polynomial.variable(self.nvars, self.index[v])
        if kind == "op" and v == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def _constant_value(p: Polynomial):
    if p.is_zero():
        return Fraction(0)
    if len(p) == 1 and not any(next(iter(p.terms))):
        return next(iter(p.terms.values()))
    return None


def parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` as a polynomial in the ordered ``variables``."""
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ParseError("duplicate variable names")
    return _Parser(text, variables).parse()


def detect_variables(text: str) -> list[str]:
    """Variable names used in ``text``, ordered x, y, z, w, z4, z5, ...

    Names outside that sequence follow in order of first appearance.
    """
    seen = []
    for kind, v, _ in _tokenize(text):
        if kind == "name" and v not in seen:
            seen.append(v)
    known = default_variables(max(len(DEFAULT_VARIABLES), 64))
    rank = {name: k for k, name in enumerate(known)}
    ordered = sorted((v for v in seen if v in rank), key=rank.__getitem__)
    return ordered + [v for v in seen if v not in rank]
