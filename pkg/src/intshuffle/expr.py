"""Expression language for shuffle-algebra elements.

Grammar (whitespace between tokens is ignored):

    expr     := ['-'] term (('+' | '-') term)*
    term     := juxt ('*' juxt)*                # '*' is the shuffle product
    juxt     := power power*                    # adjacency multiplies by a scalar
    power    := atom ['^' exponent]
    atom     := rational | name | word | '(' expr ')'
    rational := INT ['/' INT]
    word     := 'sh' '[' [sint (',' sint)*] ']'
    sint     := ['-'] INT
    name     := 'q1' | 'q2' | 'q' | 'z' | 'z' INT
    exponent := ['-'] INT | '(' ['-'] INT ')'

`sh[d1,...,dk]` is the expansion of z1^{d1} * ... * z1^{dk}; `z^d` (bare `z`)
is the one-variable element z1^d; `q1`, `q2` and indexed `z1, z2, ...` are
scalar variables, and `q` is input sugar for q1 q2 (never printed).  The
shuffle operator binds tighter than + and -, juxtaposition tighter than the
shuffle operator.

Every expression is classified bottom-up as a scalar (a Laurent polynomial)
or a shuffle element of a definite arity; adding elements of different
arities, shuffling a z-dependent scalar, or scaling an element by a scalar
that is not symmetric in its variables are type errors reported with the
character position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ArityMismatch, ExprSyntaxError
from .poly import LaurentPoly, Q1, Q2, is_symmetric, z
from .shuffle import ShuffleElement, scalar, shuffle, shuffle_word

Value = Union[LaurentPoly, ShuffleElement]


# -- syntax tree ---------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pos: int


@dataclass(frozen=True)
class Num(Node):
    value: Fraction


@dataclass(frozen=True)
class Var(Node):
    name: str  # q1, q2, q, or z<i>


@dataclass(frozen=True)
class ZElt(Node):
    exponent: int


@dataclass(frozen=True)
class WordLit(Node):
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Juxt(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Shuf(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


# -- tokenizer -----------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, NAME, SYM, END
    text: str
    pos: int


_SYMBOLS = set("+-*/^()[],")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token("SYM", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(i, f"unexpected character {ch!r}")
    tokens.append(_Token("END", "", n))
    return tokens


# -- parser --------------------------------------------------------------------

_ATOM_START = {"INT", "NAME"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.text != text:
            raise ExprSyntaxError(tok.pos, f"expected {text!r}")
        return self.advance()

    def at_sym(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "SYM" and tok.text == text

    # expr := ['-'] term (('+'|'-') term)*
    def parse_expr(self) -> Node:
        tok = self.peek()
        if self.at_sym("-"):
            self.advance()
            node: Node = Neg(tok.pos, self.parse_term())
        else:
            node = self.parse_term()
        while True:
            tok = self.peek()
            if self.at_sym("+"):
                self.advance()
                node = Add(tok.pos, node, self.parse_term())
            elif self.at_sym("-"):
                self.advance()
                node = Sub(tok.pos, node, self.parse_term())
            else:
                return node

    # term := juxt ('*' juxt)*
    def parse_term(self) -> Node:
        node = self.parse_juxt()
        while self.at_sym("*"):
            tok = self.advance()
            node = Shuf(tok.pos, node, self.parse_juxt())
        return node

    # juxt := power power*
    def parse_juxt(self) -> Node:
        node = self.parse_power()
        while True:
            tok = self.peek()
            if tok.kind in _ATOM_START or (tok.kind == "SYM" and tok.text == "("):
                node = Juxt(tok.pos, node, self.parse_power())
            else:
                return node

    # power := atom ['^' exponent]
    def parse_power(self) -> Node:
        node = self.parse_atom()
        if self.at_sym("^"):
            tok = self.advance()
            exponent = self.parse_exponent()
            if isinstance(node, ZElt):
                return ZElt(node.pos, exponent)
            return Pow(tok.pos, node, exponent)
        return node

    def parse_exponent(self) -> int:
        if self.at_sym("("):
            self.advance()
            value = self.parse_signed_int()
            self.expect_sym(")")
            return value
        return self.parse_signed_int()

    def parse_signed_int(self) -> int:
        sign = 1
        if self.at_sym("-"):
            self.advance()
            sign = -1
        tok = self.peek()
        if tok.kind != "INT":
            raise ExprSyntaxError(tok.pos, "expected an integer")
        self.advance()
        return sign * int(tok.text)

    def parse_atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            value = Fraction(int(tok.text))
            if self.at_sym("/"):
                self.advance()
                den = self.peek()
                if den.kind != "INT":
                    raise ExprSyntaxError(den.pos, "expected an integer denominator")
                self.advance()
                if int(den.text) == 0:
                    raise ExprSyntaxError(den.pos, "zero denominator")
                value = value / int(den.text)
            return Num(tok.pos, value)
        if tok.kind == "NAME":
            self.advance()
            name = tok.text
            if name == "sh":
                return self.parse_word(tok.pos)
            if name == "z":
                return ZElt(tok.pos, 1)
            if name in ("q", "q1", "q2") or (
                name.startswith("z") and name[1:].isdigit() and int(name[1:]) >= 1
            ):
                return Var(tok.pos, name)
            raise ExprSyntaxError(tok.pos, f"unknown name {name!r}")
        if self.at_sym("("):
            self.advance()
            node = self.parse_expr()
            self.expect_sym(")")
            return node
        raise ExprSyntaxError(tok.pos, "expected a value")

    def parse_word(self, pos: int) -> Node:
        self.expect_sym("[")
        exponents: list[int] = []
        if not self.at_sym("]"):
            exponents.append(self.parse_signed_int())
            while self.at_sym(","):
                self.advance()
                exponents.append(self.parse_signed_int())
        self.expect_sym("]")
        return WordLit(pos, tuple(exponents))


# -- arity/kind inference --------------------------------------------------------

SCALAR = "scalar"
ELEMENT = "element"


def infer(node: Node) -> tuple[str, int]:
    """Kind of a node: (SCALAR, max z-index) or (ELEMENT, arity)."""
    if isinstance(node, Num):
        return (SCALAR, 0)
    if isinstance(node, Var):
        if node.name.startswith("z"):
            return (SCALAR, int(node.name[1:]))
        return (SCALAR, 0)
    if isinstance(node, ZElt):
        return (ELEMENT, 1)
    if isinstance(node, WordLit):
        return (ELEMENT, len(node.exponents))
    if isinstance(node, Neg):
        return infer(node.operand)
    if isinstance(node, (Add, Sub)):
        lk, ln = infer(node.left)
        rk, rn = infer(node.right)
        if lk != rk:
            raise ArityMismatch(node.pos, "cannot add a scalar and a shuffle element")
        if lk == ELEMENT and ln != rn:
            raise ArityMismatch(
                node.pos, f"cannot add elements of arity {ln} and {rn}"
            )
        return (lk, max(ln, rn))
    if isinstance(node, Juxt):
        lk, ln = infer(node.left)
        rk, rn = infer(node.right)
        if lk == SCALAR and rk == SCALAR:
            return (SCALAR, max(ln, rn))
        if lk == rk:
            raise ArityMismatch(
                node.pos, "use '*' for the shuffle product of two elements"
            )
        scalar_z = ln if lk == SCALAR else rn
        arity = rn if lk == SCALAR else ln
        if scalar_z > arity:
            raise ArityMismatch(
                node.pos,
                f"scalar factor uses z{scalar_z} but the element has arity {arity}",
            )
        return (ELEMENT, arity)
    if isinstance(node, Shuf):
        lk, ln = infer(node.left)
        rk, rn = infer(node.right)
        for kind, span, side in ((lk, ln, node.left), (rk, rn, node.right)):
            if kind == SCALAR and span > 0:
                raise ArityMismatch(
                    side.pos, "a z-dependent scalar is not a shuffle element"
                )
        left_arity = ln if lk == ELEMENT else 0
        right_arity = rn if rk == ELEMENT else 0
        return (ELEMENT, left_arity + right_arity)
    if isinstance(node, Pow):
        kind, span = infer(node.base)
        if kind != SCALAR:
            raise ArityMismatch(node.pos, "cannot exponentiate a shuffle element")
        return (SCALAR, span)
    raise TypeError(f"unknown node {node!r}")


def parse(text: str) -> Node:
    """Parse and type-check; raises ExprSyntaxError / ArityMismatch."""
    parser = _Parser(text)
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "END":
        raise ExprSyntaxError(tail.pos, f"unexpected {tail.text!r}")
    infer(node)
    return node


# -- evaluation ------------------------------------------------------------------


def evaluate(node: Node) -> Value:
    """Evaluate a type-checked tree to a LaurentPoly or ShuffleElement."""
    if isinstance(node, Num):
        return LaurentPoly.constant(node.value)
    if isinstance(node, Var):
        if node.name == "q":
            return Q1 * Q2
        if node.name == "q1":
            return Q1
        if node.name == "q2":
            return Q2
        return z(int(node.name[1:]))
    if isinstance(node, ZElt):
        return ShuffleElement(1, z(1, node.exponent) if node.exponent else LaurentPoly.constant(1))
    if isinstance(node, WordLit):
        return shuffle_word(node.exponents)
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Add):
        return evaluate(node.left) + evaluate(node.right)
    if isinstance(node, Sub):
        return evaluate(node.left) - evaluate(node.right)
    if isinstance(node, Juxt):
        left = evaluate(node.left)
        right = evaluate(node.right)
        if isinstance(left, LaurentPoly) and isinstance(right, LaurentPoly):
            return left * right
        poly, element = (
            (left, right) if isinstance(left, LaurentPoly) else (right, left)
        )
        assert isinstance(element, ShuffleElement)
        if not is_symmetric(poly, element.arity):
            raise ArityMismatch(
                node.pos,
                f"scalar factor must be symmetric in z1..z{element.arity}",
            )
        return element.scaled(poly)
    if isinstance(node, Shuf):
        left = evaluate(node.left)
        right = evaluate(node.right)
        if isinstance(left, LaurentPoly):
            left = scalar(left)
        if isinstance(right, LaurentPoly):
            right = scalar(right)
        return shuffle(left, right)
    if isinstance(node, Pow):
        base = evaluate(node.base)
        assert isinstance(base, LaurentPoly)
        if node.exponent < 0 and len(base.terms) != 1:
            raise ArityMismatch(
                node.pos, "negative powers need an invertible monomial base"
            )
        return base**node.exponent
    raise TypeError(f"unknown node {node!r}")


def eval_text(text: str) -> Value:
    return evaluate(parse(text))


def parse_poly(text: str) -> LaurentPoly:
    """Parse a scalar expression (used for certificate cofactors)."""
    node = parse(text)
    kind, _ = infer(node)
    if kind != SCALAR:
        raise ArityMismatch(node.pos, "expected a scalar expression")
    value = evaluate(node)
    assert isinstance(value, LaurentPoly)
    return value


def as_element(value: Value) -> ShuffleElement:
    """View a value as a shuffle element; scalars take their z-span as arity."""
    if isinstance(value, ShuffleElement):
        return value
    arity = value.z_span()
    if not is_symmetric(value, arity):
        raise ValueError(f"polynomial is not symmetric in z1..z{arity}")
    return ShuffleElement(arity, value)
