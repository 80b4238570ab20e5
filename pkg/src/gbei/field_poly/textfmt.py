"""Polynomial text syntax.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | 'x[' i '][' j ']' | 'y[' k ']'
            | 'f[' i ',' j ']' | 'minor[' k ',' l '|' i ',' j ']' | '(' expr ')'

``f[i,j]`` is x[1][i]*x[2][j] - x[1][j]*x[2][i] and ``minor[k,l|i,j]`` is
x[k][i]*x[l][j] - x[k][j]*x[l][i].
"""

from __future__ import annotations

import re
from fractions import Fraction

from .order import MonomialOrder
from .polynomial import Polynomial, aux_variable, binomial_f, minor, variable
from .ring import RingSpec


class PolynomialSyntaxError(ValueError):
    pass


_TOKEN = re.compile(
    r"""
    (?P<num>\d+)
  | (?P<x>x\[(\d+)\]\[(\d+)\])
  | (?P<y>y\[(\d+)\])
  | (?P<f>f\[(\d+),(\d+)\])
  | (?P<minor>minor\[(\d+),(\d+)\|(\d+),(\d+)\])
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, object]]:
    s = "".join(text.split())
    pos = 0
    out = []
    while pos < len(s):
        mt = _TOKEN.match(s, pos)
        if not mt:
            raise PolynomialSyntaxError(f"unexpected input at {s[pos:pos + 12]!r}")
        kind = mt.lastgroup
        if kind == "num":
            out.append(("num", int(mt.group("num"))))
        elif kind == "op":
            out.append(("op", mt.group("op")))
        else:
            nums = tuple(int(g) for g in mt.groups()[mt.re.groupindex[kind]:] if g is not None)
            out.append((kind, nums))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, tokens, ring: RingSpec):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take_op(self, op) -> bool:
        if self.peek() == ("op", op):
            self.i += 1
            return True
        return False

    def expect_num(self) -> int:
        kind, val = self.peek()
        if kind != "num":
            raise PolynomialSyntaxError("expected an integer")
        self.i += 1
        return val

    def expr(self) -> Polynomial:
        if self.take_op("-"):
            acc = -self.term()
        else:
            self.take_op("+")
            acc = self.term()
        while True:
            if self.take_op("+"):
                acc = acc + self.term()
            elif self.take_op("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.take_op("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.take_op("^"):
            return base ** self.expect_num()
        return base

    def atom(self) -> Polynomial:
        kind, val = self.peek()
        r = self.ring
        if kind is None:
            raise PolynomialSyntaxError("unexpected end of input")
        self.i += 1
        try:
            if kind == "num":
                if self.take_op("/"):
                    den = self.expect_num()
                    if den == 0:
                        raise PolynomialSyntaxError("zero denominator")
                    return Polynomial.constant(r, Fraction(val, den))
                return Polynomial.constant(r, val)
            if kind == "x":
                return variable(r, *val)
            if kind == "y":
                return aux_variable(r, *val)
            if kind == "f":
                return binomial_f(r, *val)
            if kind == "minor":
                return minor(r, *val)
        except ValueError as exc:
            if isinstance(exc, PolynomialSyntaxError):
                raise
            raise PolynomialSyntaxError(str(exc)) from exc
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if not self.take_op(")"):
                raise PolynomialSyntaxError("missing ')'")
            return inner
        raise PolynomialSyntaxError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ring: RingSpec) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    parser = _Parser(tokens, ring)
    poly = parser.expr()
    if parser.i != len(tokens):
        raise PolynomialSyntaxError(f"trailing input after position {parser.i}")
    return poly


def _coeff_text(c, p: int) -> tuple[int, str]:
    """Sign and magnitude text; GF(p) residues print in the symmetric range."""
    if p:
        c = c - p if c > p // 2 else c
        return (-1 if c < 0 else 1), str(abs(c))
    sign = -1 if c < 0 else 1
    c = abs(c)
    return sign, (str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")


def format_monomial(exps: tuple[int, ...], ring: RingSpec) -> str:
    parts = []
    for v, e in enumerate(exps):
        if e:
            name = ring.var_name(v)
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text: terms in descending order under ``order`` (default degrevlex)."""
    from . import monomial as mono

    ring = f.ring
    if not f:
        return "0"
    order = order or MonomialOrder.degrevlex(ring.nvars)
    out = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        sign, mag = _coeff_text(f.terms[m], ring.characteristic)
        body = format_monomial(mono.unpack(m, ring.nvars), ring)
        if not body:
            text = mag
        elif mag == "1":
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(f"-{text}" if sign < 0 else text)
        else:
            out.append(f"{'-' if sign < 0 else '+'} {text}")
    return " ".join(out)
