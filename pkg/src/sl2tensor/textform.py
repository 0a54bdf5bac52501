"""Reading nil affine Hecke expressions back from text.

The grammar is the one render() writes, plus ordinary operator input:

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := RATIONAL | 'y' | 'x'D | 'tau'D | 's'D | 'delta'D | '(' expr ')'

RATIONAL is an unsigned integer or a quotient like 3/2; D is a slot index.
Everything parses into a normal-form element on n slots.  When n is not
given it is inferred as the smallest arity the named generators allow
(tau_i, s_i, delta_i need i+1 slots, x_i needs i), so e.g.
parse("tau1 * x1") lives on two slots.  parse(h.render(), h.n) == h.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import nilhecke as nh
from .polynomials import XRING

__all__ = ["parse", "ParseError", "infer_arity"]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"(\d+/\d+|\d+)|([a-z]+[0-9]*)|([()+\-*^])|(\S)")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, op, junk = m.groups()
        if junk:
            raise ParseError(f"unexpected character {junk!r} at position {m.start()}")
        if num:
            tokens.append(("num", num))
        elif name:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
    return tokens


_NAME = re.compile(r"([a-z]+)([0-9]*)$")

_GENERATORS = {"x", "tau", "s", "delta"}


def _split_name(name: str):
    base, digits = _NAME.match(name).groups()
    if base == "y":
        if digits:
            raise ParseError(f"{name!r}: y takes no index")
        return "y", None
    if base not in _GENERATORS:
        raise ParseError(f"unknown name {name!r}")
    if not digits:
        raise ParseError(f"{name!r} needs a slot index")
    return base, int(digits)


def infer_arity(text: str) -> int:
    """Smallest number of slots on which every named generator exists."""
    n = 1
    for kind, val in _tokenize(text):
        if kind != "name":
            continue
        base, idx = _split_name(val)
        if base == "x":
            n = max(n, idx)
        elif base in ("tau", "s", "delta"):
            n = max(n, idx + 1)
    return n


class _Parser:
    def __init__(self, tokens, n: int):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def expr(self) -> nh.NilHeckeElement:
        kind, val = self.peek()
        negate = kind == "op" and val == "-"
        if negate:
            self.take()
        total = self.term()
        if negate:
            total = nh.zero(self.n) - total
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                nxt = self.term()
                total = total + nxt if val == "+" else total - nxt
            else:
                return total

    def term(self) -> nh.NilHeckeElement:
        total = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                total = total * self.factor()
            else:
                return total

    def factor(self) -> nh.NilHeckeElement:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ParseError(f"expected an integer exponent, found {val!r}")
            power = int(val)
            out = nh.one(self.n)
            for _ in range(power):
                out = out * base
            return out
        return base

    def atom(self) -> nh.NilHeckeElement:
        kind, val = self.take()
        if kind == "num":
            if "/" in val:
                a, b = val.split("/")
                coeff = Fraction(int(a), int(b))
            else:
                coeff = Fraction(int(val))
            return nh.from_poly(XRING.monomial((0, 0, 0, 0, 0), coeff), self.n)
        if kind == "name":
            base, idx = _split_name(val)
            if base == "y":
                return nh.from_poly(nh.yvar(), self.n)
            if base == "x":
                if not 1 <= idx <= self.n:
                    raise ParseError(f"x{idx} does not exist on {self.n} slots")
                return nh.from_poly(nh.xvar(idx), self.n)
            if idx < 1 or idx >= self.n:
                raise ParseError(f"{val} does not exist on {self.n} slots")
            maker = {"tau": nh.tau, "s": nh.s_elem, "delta": nh.delta}[base]
            return maker(idx, self.n)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse(text: str, n: int = None) -> nh.NilHeckeElement:
    """Parse an expression into a normal-form element on n slots."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    if n is None:
        n = infer_arity(text)
    if not 1 <= n <= 4:
        raise ParseError(f"slot count {n} out of range 1..4")
    parser = _Parser(tokens, n)
    result = parser.expr()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing input from token {parser.pos}")
    return result
