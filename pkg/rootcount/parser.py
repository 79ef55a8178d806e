# rootcount/parser.py
"""
Integer polynomial expressions in x.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary | <implicit> unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | 'x' | '(' expr ')'

Implicit multiplication is only accepted when the left factor ends in ')' or
in an exponent and the right factor opens with '(', so products such as
(x-1234)^3(x-7193)^4 paste in unchanged. Expansion is exact over Z.

Every node bounds the degree and coefficient size of its expansion; products
and powers that would exceed the caps are rejected before anything is expanded.
"""
import re
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_pow, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ

from .constants import MAX_COEFF_BITS, MAX_DEGREE
from .exceptions import PolySyntaxError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?)|(?P<var>x)|(?P<op>[-+*^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", one of "+-*^()", or "end"
    text: str
    position: int


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup)
        if m.lastgroup == "num":
            kind = "num"
        elif m.lastgroup == "var":
            kind = "x"
        else:
            kind = m.group("op")
        tokens.append(Token(kind, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# --- AST ---


class PolyExpr:
    def dense(self):
        """Big-endian coefficient list over ZZ, as sympy's dup_* expects."""
        raise NotImplementedError

    def coefficients(self):
        """Little-endian integer coefficients; [0] for the zero polynomial."""
        try:
            dense = dup_strip(self.dense())
        except RecursionError:
            raise PolySyntaxError("expression nested too deeply", 0) from None
        return [int(c) for c in reversed(dense)] or [0]

    @cached_property
    def size(self):
        """(degree bound, coefficient bit-length bound) of the expansion."""
        return self._size()

    def _size(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Const(PolyExpr):
    value: int

    def dense(self):
        return dup_strip([ZZ(self.value)])

    def _size(self):
        return 0, abs(self.value).bit_length()


@dataclass(frozen=True)
class Var(PolyExpr):
    def dense(self):
        return [ZZ.one, ZZ.zero]

    def _size(self):
        return 1, 1


@dataclass(frozen=True)
class Neg(PolyExpr):
    operand: PolyExpr

    def dense(self):
        return dup_neg(self.operand.dense(), ZZ)

    def _size(self):
        return self.operand.size


@dataclass(frozen=True)
class BinOp(PolyExpr):
    op: str
    left: PolyExpr
    right: PolyExpr

    def dense(self):
        a, b = self.left.dense(), self.right.dense()
        if self.op == "+":
            return dup_add(a, b, ZZ)
        if self.op == "-":
            return dup_sub(a, b, ZZ)
        return dup_mul(a, b, ZZ)

    def _size(self):
        (da, ba), (db, bb) = self.left.size, self.right.size
        if self.op == "*":
            return da + db, ba + bb + (min(da, db) + 1).bit_length()
        return max(da, db), max(ba, bb) + 1


@dataclass(frozen=True)
class Pow(PolyExpr):
    base: PolyExpr
    exponent: int

    def dense(self):
        return dup_pow(self.base.dense(), self.exponent, ZZ)

    def _size(self):
        d, b = self.base.size
        return d * self.exponent, self.exponent * (b + (d + 1).bit_length())


# --- Parser ---


class _Parser:
    def __init__(self, text, max_degree=MAX_DEGREE):
        self.tokens = tokenize(text)
        self.i = 0
        self.max_degree = max_degree

    @property
    def current(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.current
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise PolySyntaxError(f"expected {kind!r}, found {found}", tok.position)
        return self.advance()

    def check_size(self, node, message, position):
        degree, bits = node.size
        if degree > self.max_degree or bits > MAX_COEFF_BITS:
            raise PolySyntaxError(message, position)
        return node

    def parse(self):
        if self.current.kind == "end":
            raise PolySyntaxError("empty expression", 0)
        expr = self.expr()
        if self.current.kind != "end":
            raise PolySyntaxError(
                f"unexpected {self.current.text!r}; use '*' between factors",
                self.current.position,
            )
        return expr

    def expr(self):
        node = self.term()
        while self.current.kind in ("+", "-"):
            position = self.current.position
            op = self.advance().kind
            node = self.check_size(BinOp(op, node, self.term()), "sum too large", position)
        return node

    def term(self):
        node, implicit_ok = self.unary()
        while True:
            position = self.current.position
            if self.current.kind == "*":
                self.advance()
                rhs, implicit_ok = self.unary()
            elif self.current.kind == "(" and implicit_ok:
                rhs, implicit_ok = self.unary()
            else:
                return node
            node = self.check_size(BinOp("*", node, rhs), "product too large", position)

    def unary(self):
        if self.current.kind in ("+", "-"):
            sign = self.advance().kind
            operand, implicit_ok = self.unary()
            return (Neg(operand) if sign == "-" else operand), implicit_ok
        return self.power()

    def power(self):
        base, closed = self.atom()
        if self.current.kind != "^":
            return base, closed
        self.advance()
        tok = self.current
        if tok.kind != "num" or "." in tok.text:
            raise PolySyntaxError("exponent must be a non-negative integer", tok.position)
        self.advance()
        node = self.check_size(Pow(base, int(tok.text)), "exponent too large", tok.position)
        return node, True

    def atom(self):
        tok = self.current
        if tok.kind == "num":
            if "." in tok.text:
                raise PolySyntaxError("coefficients must be integers", tok.position)
            self.advance()
            return Const(int(tok.text)), False
        if tok.kind == "x":
            self.advance()
            return Var(), False
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner, True
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise PolySyntaxError(f"expected a number, 'x' or '(', found {found}", tok.position)


def parse_poly(text, max_degree=MAX_DEGREE):
    try:
        return _Parser(text, max_degree).parse()
    except RecursionError:
        raise PolySyntaxError("expression nested too deeply", 0) from None


def parse_coeffs(text, max_degree=MAX_DEGREE):
    """'c0,c1,...,cd' in decimal, possibly negative."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) - 1 > max_degree:
        raise PolySyntaxError(f"degree exceeds {max_degree}", 0)
    coeffs = []
    offset = 0
    for part in parts:
        try:
            coeffs.append(int(part))
        except ValueError:
            raise PolySyntaxError(f"bad coefficient {part!r}", offset) from None
        offset += len(part) + 1
    return coeffs
