"""Small expression language for interactive evaluation of engine objects.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' '-'? INT)?
    atom   := INT | IDENT | IDENT '(' IDENT (',' IDENT)* ')'
            | '(' expr ')' | '[' expr ',' expr ';' expr ',' expr ']'

'*' is noncommutative and order-preserving; '^' takes integer literals only.
Values are scalars, torus elements or 2x2 matrices over the torus, always in
canonical normal form, and print_normal_form round-trips through the parser.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LexError, NotCentral, ParseError, TypeMismatch, UnknownName
from .matrices import Matrix2, mat_scalar
from .scalars import Scalar
from .torus import TorusElement, as_torus

INT, IDENT, PLUS, MINUS, STAR, CARET = "INT", "IDENT", "PLUS", "MINUS", "STAR", "CARET"
LPAREN, RPAREN, LBRACK, RBRACK = "LPAREN", "RPAREN", "LBRACK", "RBRACK"
SEMI, COMMA, EOF = "SEMI", "COMMA", "EOF"


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


_SINGLE = {
    "+": PLUS,
    "-": MINUS,
    "*": STAR,
    "^": CARET,
    "(": LPAREN,
    ")": RPAREN,
    "[": LBRACK,
    "]": RBRACK,
    ";": SEMI,
    ",": COMMA,
}


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(Token(INT, text[start:pos], start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(Token(IDENT, text[start:pos], start))
            continue
        raise LexError(pos, ch)
    tokens.append(Token(EOF, "", len(text)))
    return tokens


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class MatrixLiteral:
    a11: object
    a12: object
    a21: object
    a22: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind, what):
        token = self.peek()
        if token.kind != kind:
            raise ParseError(token.position, what)
        return self.advance()

    def parse(self):
        node = self.expr()
        token = self.peek()
        if token.kind != EOF:
            raise ParseError(token.position, "end of input")
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind in (PLUS, MINUS):
            op = self.advance()
            right = self.term()
            node = Add(node, right if op.kind == PLUS else Neg(right))
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == STAR:
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.peek().kind == MINUS:
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.peek().kind == CARET:
            self.advance()
            sign = 1
            if self.peek().kind == MINUS:
                self.advance()
                sign = -1
            token = self.expect(INT, "integer exponent")
            node = Pow(node, sign * int(token.lexeme))
        return node

    def atom(self):
        token = self.peek()
        if token.kind == INT:
            self.advance()
            return Num(int(token.lexeme))
        if token.kind == IDENT:
            self.advance()
            if self.peek().kind == LPAREN:
                self.advance()
                args = [self.expect(IDENT, "argument name").lexeme]
                while self.peek().kind == COMMA:
                    self.advance()
                    args.append(self.expect(IDENT, "argument name").lexeme)
                self.expect(RPAREN, "')'")
                return Call(token.lexeme, tuple(args))
            return Const(token.lexeme)
        if token.kind == LPAREN:
            self.advance()
            node = self.expr()
            self.expect(RPAREN, "')'")
            return node
        if token.kind == LBRACK:
            self.advance()
            a11 = self.expr()
            self.expect(COMMA, "','")
            a12 = self.expr()
            self.expect(SEMI, "';'")
            a21 = self.expr()
            self.expect(COMMA, "','")
            a22 = self.expr()
            self.expect(RBRACK, "']'")
            return MatrixLiteral(a11, a12, a21, a22)
        raise ParseError(token.position, "integer, name, '(' or '['")


def parse(tokens):
    return _Parser(list(tokens)).parse()


def parse_text(text: str):
    return parse(tokenize(text))


# -- registry -------------------------------------------------------------------

_REGISTRY_CACHE = {}


def registry():
    """Read-only constants: torus generators, units, and the named matrices."""
    if _REGISTRY_CACHE:
        return _REGISTRY_CACHE
    from .families import (
        FAMILIES,
        build_family,
        build_qmonodromy,
        quantum_geodesics_elements,
    )

    constants = {
        "i": Scalar.i(),
        "q2": Scalar.unit(0),
        "k0": Scalar.unit(1),
        "k1": Scalar.unit(2),
        "u1": Scalar.unit(3),
        "eps": Scalar.unit(4),
        "e1": TorusElement.gen(1),
        "e2": TorusElement.gen(2),
        "e3": TorusElement.gen(3),
    }
    from .torus import u0_element

    constants["u0"] = u0_element()
    m1, m2, m3, m_inf = build_qmonodromy()
    constants.update({"M1h": m1, "M2h": m2, "M3h": m3, "Minfh": m_inf})
    g12, g23, g31 = quantum_geodesics_elements()
    constants.update({"G12h": g12, "G23h": g23, "G31h": g31})

    def family_slot(slot):
        def build(family):
            if family not in FAMILIES:
                raise UnknownName(f"unknown family {family!r}")
            return getattr(build_family(family), slot)

        return build

    callables = {
        "V0": family_slot("v0"),
        "V1": family_slot("v1"),
        "Vc0": family_slot("vc0"),
        "Vc1": family_slot("vc1"),
    }
    _REGISTRY_CACHE.update({"constants": constants, "callables": callables})
    return _REGISTRY_CACHE


# -- evaluation -------------------------------------------------------------------


def _add(a, b):
    if isinstance(a, Matrix2) or isinstance(b, Matrix2):
        if isinstance(a, Matrix2) and isinstance(b, Matrix2):
            return a + b
        matrix, other = (a, b) if isinstance(a, Matrix2) else (b, a)
        other = as_torus(other)
        if not other.is_central():
            raise NotCentral("matrix plus a non-central element")
        return matrix + mat_scalar(other)
    if isinstance(a, TorusElement) or isinstance(b, TorusElement):
        return as_torus(a) + as_torus(b)
    return a + b


def _mul(a, b):
    if isinstance(a, Matrix2) and isinstance(b, Matrix2):
        return a * b
    if isinstance(a, Matrix2) or isinstance(b, Matrix2):
        matrix = a if isinstance(a, Matrix2) else b
        other = as_torus(b if isinstance(a, Matrix2) else a)
        if not other.is_central():
            raise NotCentral("matrix times a non-central element")
        return matrix * mat_scalar(other) if matrix is a else mat_scalar(other) * matrix
    if isinstance(a, TorusElement) or isinstance(b, TorusElement):
        return as_torus(a) * as_torus(b)
    return a * b


def _pow(value, exponent):
    if isinstance(value, Matrix2):
        if exponent < 0:
            raise TypeMismatch("negative matrix powers are not defined here")
        out = mat_scalar(TorusElement.one())
        for _ in range(exponent):
            out = out * value
        return out
    return value ** exponent


def evaluate(ast, reg=None):
    reg = registry() if reg is None else reg
    if isinstance(ast, Num):
        return Scalar.from_int(ast.value)
    if isinstance(ast, Const):
        try:
            return reg["constants"][ast.name]
        except KeyError:
            raise UnknownName(f"unknown name {ast.name!r}") from None
    if isinstance(ast, Call):
        fn = reg["callables"].get(ast.name)
        if fn is None:
            raise UnknownName(f"unknown function {ast.name!r}")
        return fn(*ast.args)
    if isinstance(ast, Neg):
        return -evaluate(ast.child, reg)
    if isinstance(ast, Add):
        return _add(evaluate(ast.left, reg), evaluate(ast.right, reg))
    if isinstance(ast, Mul):
        return _mul(evaluate(ast.left, reg), evaluate(ast.right, reg))
    if isinstance(ast, Pow):
        return _pow(evaluate(ast.base, reg), ast.exponent)
    if isinstance(ast, MatrixLiteral):
        entries = []
        for child in (ast.a11, ast.a12, ast.a21, ast.a22):
            value = evaluate(child, reg)
            if isinstance(value, Matrix2):
                raise TypeMismatch("matrix entries must be ring elements")
            entries.append(as_torus(value))
        return Matrix2(*entries)
    raise TypeMismatch(f"cannot evaluate {ast!r}")


def eval_text(text: str):
    return evaluate(parse_text(text))


# -- printing ---------------------------------------------------------------------


def _needs_parens(text: str) -> bool:
    return " + " in text or " - " in text


def print_normal_form(value) -> str:
    """Deterministic canonical text; parses back to an equal value."""
    if isinstance(value, Scalar):
        return value.text()
    if isinstance(value, TorusElement):
        if value.is_scalar():
            return value.scalar_part().text()
        return value.text()
    if isinstance(value, Matrix2):
        diag = value.a11
        off_zero = value.a12.is_zero() and value.a21.is_zero()
        if off_zero and (value.a11 - value.a22).is_zero() and diag.is_central():
            if diag == TorusElement.one():
                return "[1,0;0,1]"
            inner = print_normal_form(diag)
            if _needs_parens(inner):
                inner = f"({inner})"
            return f"{inner} * [1,0;0,1]"
        return value.text()
    raise TypeMismatch(f"cannot print {value!r}")


def values_equal(a, b) -> bool:
    """Semantic equality with scalar / torus-scalar unification."""
    if isinstance(a, Matrix2) != isinstance(b, Matrix2):
        return False
    if isinstance(a, Matrix2):
        return (a - b).is_zero()
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a == b
    return as_torus(a) == as_torus(b)
