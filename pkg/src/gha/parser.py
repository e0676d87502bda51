"""Surface syntax for elements of H(f) and for defining polynomials.

Grammar, loosest to tightest binding: '+'/'-' < '*' < unary '-' < '^'.
'*' is noncommutative and operand order is preserved.  Exponents are
literal nonnegative integers.  'z' is input sugar for x*y - h; printed
output never uses it.  Polynomial inputs (the --f flag) additionally
allow implicit multiplication, as in '2h^3 - h'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import AlgebraElement, Context, generators
from .errors import ParseError
from .field import FieldDesc, FieldElement
from .poly import Poly

Expr = Union["Num", "Sym", "Add", "Sub", "Mul", "Neg", "Pow"]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str  # x, y, h, z or zeta


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, NAME, OP, END
    text: str
    pos: int


_ELEMENT_NAMES = ("x", "y", "h", "z", "zeta")
_POLY_NAMES = ("h", "zeta")


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            tokens.append(_Token("INT", src[start:i], start))
        elif c.isalpha():
            start = i
            while i < len(src) and src[i].isalpha():
                i += 1
            tokens.append(_Token("NAME", src[start:i], start))
        elif c in "+-*^()/":
            tokens.append(_Token("OP", c, i))
            i += 1
        else:
            raise ParseError(i, {"integer", "name", "operator"}, c)
    tokens.append(_Token("END", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], names: tuple[str, ...], implicit_mul: bool):
        self.tokens = tokens
        self.pos = 0
        self.names = names
        self.implicit_mul = implicit_mul

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                node = Mul(node, self.unary())
            elif self.implicit_mul and (
                tok.kind in ("INT", "NAME") or (tok.kind == "OP" and tok.text == "(")
            ):
                node = Mul(node, self.unary())
            else:
                return node

    def unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        while self.peek().kind == "OP" and self.peek().text == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "INT":
                raise ParseError(tok.pos, {"nonnegative integer exponent"}, tok.text)
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            num = int(tok.text)
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "/":
                self.advance()
                den_tok = self.peek()
                if den_tok.kind != "INT":
                    raise ParseError(den_tok.pos, {"integer denominator"}, den_tok.text)
                self.advance()
                if int(den_tok.text) == 0:
                    raise ParseError(den_tok.pos, {"nonzero denominator"}, den_tok.text)
                return Num(Fraction(num, int(den_tok.text)))
            return Num(Fraction(num))
        if tok.kind == "NAME":
            if tok.text not in self.names:
                raise ParseError(tok.pos, set(self.names), tok.text)
            self.advance()
            return Sym(tok.text)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            node = self.expr()
            closing = self.peek()
            if not (closing.kind == "OP" and closing.text == ")"):
                raise ParseError(closing.pos, {"')'"}, closing.text)
            self.advance()
            return node
        raise ParseError(tok.pos, {"integer", "'('"} | set(self.names), tok.text)


def parse(text: str) -> Expr:
    """Parse an element expression over x, y, h, z, zeta and rationals."""
    parser = _Parser(_tokenize(text), _ELEMENT_NAMES, implicit_mul=False)
    node = parser.expr()
    tail = parser.peek()
    if tail.kind != "END":
        raise ParseError(tail.pos, {"operator", "end of input"}, tail.text)
    return node


def evaluate(node: Expr, ctx: Context) -> AlgebraElement:
    """Fold an expression tree into a normal form over the context."""
    gens = generators(ctx)
    match node:
        case Num(value):
            return AlgebraElement.from_scalar(ctx, value)
        case Sym("zeta"):
            return AlgebraElement.from_scalar(ctx, FieldElement.zeta(ctx.field))
        case Sym(name):
            return getattr(gens, name)
        case Add(left, right):
            return evaluate(left, ctx) + evaluate(right, ctx)
        case Sub(left, right):
            return evaluate(left, ctx) - evaluate(right, ctx)
        case Mul(left, right):
            return evaluate(left, ctx) * evaluate(right, ctx)
        case Neg(operand):
            return -evaluate(operand, ctx)
        case Pow(base, exponent):
            return evaluate(base, ctx) ** exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, ctx: Context) -> AlgebraElement:
    return evaluate(parse(text), ctx)


def _eval_poly(node: Expr, field: FieldDesc) -> Poly:
    match node:
        case Num(value):
            return Poly.constant(field, value)
        case Sym("h"):
            return Poly.gen(field)
        case Sym("zeta"):
            return Poly.constant(field, FieldElement.zeta(field))
        case Add(left, right):
            return _eval_poly(left, field) + _eval_poly(right, field)
        case Sub(left, right):
            return _eval_poly(left, field) - _eval_poly(right, field)
        case Mul(left, right):
            return _eval_poly(left, field) * _eval_poly(right, field)
        case Neg(operand):
            return -_eval_poly(operand, field)
        case Pow(base, exponent):
            return _eval_poly(base, field) ** exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(text: str, field: FieldDesc = None) -> Poly:
    """Parse a polynomial in h; '*' may be left implicit ('2h^3 - h')."""
    from .field import RATIONALS

    if field is None:
        field = RATIONALS
    parser = _Parser(_tokenize(text), _POLY_NAMES, implicit_mul=True)
    node = parser.expr()
    tail = parser.peek()
    if tail.kind != "END":
        raise ParseError(tail.pos, {"operator", "end of input"}, tail.text)
    return _eval_poly(node, field)
