"""Parsers for homogeneous forms and analytic expressions.

Form grammar: variables x0..xn, integer/rational literals (p/q), Gaussian
literals a+bi (with 'i' usable on its own or as a contiguous suffix,
e.g. 3i, 2/5i), + - * ^ and parentheses.  Expression grammar adds z and
exp(...).  Whitespace is insignificant.  Printing any parsed value and
re-parsing it yields an equal value; accepting Gaussian literals in
forms is what makes that round trip total, since the coefficient field
is complex either way.
"""
from __future__ import annotations

import re
from typing import Dict, NamedTuple

from .errors import InhomogeneousFormError, ParseError, PreconditionError
from .expressions import ExpPoly
from .polynomials import HomogeneousPoly, Monomial
from .rationals import GR_ONE, GR_ZERO, GaussianRational, gauss, rational

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?i?)|(?P<imag>i)|(?P<var>x\d+)|(?P<z>z)"
    r"|(?P<exp>exp)|(?P<op>[+\-*^()]))"
)


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        for kind in ("num", "imag", "var", "z", "exp", "op"):
            got = m.group(kind)
            if got is not None:
                tokens.append(_Token(kind, got, m.start(kind)))
                break
        pos = m.end()
    return tokens


def _literal_value(text: str) -> GaussianRational:
    if text.endswith("i"):
        body = text[:-1] or "1"
        return GaussianRational(0, rational(body) if "/" not in body else
                                rational(*map(int, body.split("/"))))
    if "/" in text:
        num, den = text.split("/")
        return GaussianRational(rational(int(num), int(den)))
    return GaussianRational(int(text))


class _Parser:
    """Recursive descent over the shared grammar.

    The atom hook decides what variables and function calls mean, which
    is the only difference between the form and expression readers.
    """

    def __init__(self, tokens: list[_Token], source: str):
        self.tokens = tokens
        self.source = source
        self.k = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.source))
        self.k += 1
        return tok

    def expect_op(self, text: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.pos)

    def parse(self, atom):
        value = self.sum(atom)
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def sum(self, atom):
        value = self.product(atom)
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                return value
            self.take()
            rhs = self.product(atom)
            value = value + rhs if tok.text == "+" else value - rhs

    def product(self, atom):
        value = self.power(atom)
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text != "*":
                return value
            self.take()
            value = value * self.power(atom)

    def power(self, atom):
        negations = 0
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text == "-":
                self.take()
                negations += 1
            else:
                break
        base = atom(self)
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.take()
            etok = self.take()
            if etok.kind != "num" or not etok.text.isdigit():
                raise ParseError("exponent must be a nonnegative integer", etok.pos)
            base = base ** int(etok.text)
        return -base if negations & 1 else base


# -- forms ---------------------------------------------------------------------

_RawPoly = Dict[Monomial, GaussianRational]


class _FormAlgebra:
    """Degree-agnostic polynomial used while a form is being read."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: _RawPoly):
        self.nvars = nvars
        self.terms = terms

    @classmethod
    def const(cls, nvars: int, c: GaussianRational):
        return cls(nvars, {(0,) * nvars: c} if c else {})

    def __add__(self, other):
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, GR_ZERO) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return _FormAlgebra(self.nvars, terms)

    def __sub__(self, other):
        return self + _FormAlgebra(other.nvars, {m: -c for m, c in other.terms.items()})

    def __neg__(self):
        return _FormAlgebra(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        terms: _RawPoly = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(mono, GR_ZERO) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return _FormAlgebra(self.nvars, terms)

    def __pow__(self, k: int):
        result = _FormAlgebra.const(self.nvars, GR_ONE)
        for _ in range(k):
            result = result * self
        return result


def parse_form(text: str, nvars: int | None = None) -> HomogeneousPoly:
    """Parse a homogeneous form; raises on syntax or inhomogeneity.

    When nvars is omitted it is inferred as (largest variable index)+1.
    """
    tokens = _tokenize(text)
    max_index = -1
    for tok in tokens:
        if tok.kind == "var":
            max_index = max(max_index, int(tok.text[1:]))
        elif tok.kind in ("z", "exp"):
            raise ParseError(f"{tok.text!r} is not allowed in a form", tok.pos)
    inferred = max_index + 1 if max_index >= 0 else 1
    nv = nvars if nvars is not None else inferred
    if max_index >= nv:
        raise ParseError(f"variable x{max_index} out of range for {nv} variables",
                         next(t.pos for t in tokens if t.kind == "var"
                              and int(t.text[1:]) == max_index))

    def atom(p: _Parser) -> _FormAlgebra:
        tok = p.take()
        if tok.kind == "num":
            return _FormAlgebra.const(nv, _literal_value(tok.text))
        if tok.kind == "imag":
            return _FormAlgebra.const(nv, GaussianRational(0, 1))
        if tok.kind == "var":
            index = int(tok.text[1:])
            mono = tuple(1 if j == index else 0 for j in range(nv))
            return _FormAlgebra(nv, {mono: GR_ONE})
        if tok.kind == "op" and tok.text == "(":
            value = p.sum(atom)
            p.expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)

    raw = _Parser(tokens, text).parse(atom)
    if not raw.terms:
        return HomogeneousPoly.zero(nv, 0)
    degrees = {sum(m) for m in raw.terms}
    if len(degrees) != 1:
        raise InhomogeneousFormError(
            f"form mixes degrees {sorted(degrees)}: {text.strip()!r}")
    return HomogeneousPoly(nv, degrees.pop(), raw.terms)


def parse_expr(text: str) -> ExpPoly:
    """Parse an analytic expression over z into canonical form."""
    tokens = _tokenize(text)
    for tok in tokens:
        if tok.kind == "var":
            raise ParseError(f"{tok.text!r} is not allowed in an expression", tok.pos)

    def atom(p: _Parser) -> ExpPoly:
        tok = p.take()
        if tok.kind == "num":
            return ExpPoly.constant(_literal_value(tok.text))
        if tok.kind == "imag":
            return ExpPoly.constant(GaussianRational(0, 1))
        if tok.kind == "z":
            return ExpPoly.variable()
        if tok.kind == "exp":
            p.expect_op("(")
            arg = p.sum(atom)
            p.expect_op(")")
            if not arg.is_polynomial:
                raise ParseError("exp argument must be polynomial", tok.pos)
            return ExpPoly.exp_of(arg)
        if tok.kind == "op" and tok.text == "(":
            value = p.sum(atom)
            p.expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)

    return _Parser(tokens, text).parse(atom)


def parse_inputs(text: str, kind: str):
    """Dispatch on kind: 'form' or 'expr'."""
    if kind == "form":
        return parse_form(text)
    if kind == "expr":
        return parse_expr(text)
    raise PreconditionError(f"unknown input kind {kind!r}")
