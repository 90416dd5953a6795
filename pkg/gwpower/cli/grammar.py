"""
Shared expression grammar for GW elements and variety classes

One lexer and one binding-power parser serve both kinds; the kind switch decides which
primaries are accepted. Trees are frozen dataclasses, and `print_tree` emits the minimal
parenthesization, so `parse_expression(print_tree(t), kind) == t`.

    gw:       <a>  H  INT  ( expr )  -expr  expr (+|-|*) expr
    variety:  Pt  A^n  P^n  Gm  Curve(g=G)  Et(c1,...,cs)  Ab(d)  Sym^n(expr)  INT  ...
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple, Union

from gwpower.exceptions import InvalidArgument, ParseError
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField
from gwpower.motivic.atoms import AbelianVariety, Affine, Curve, Point, Projective, SymCurve, Torus
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.symmetric import sym_class

KINDS = ("gw", "variety")

# Binding powers
_ADDITIVE = 10
_MULTIPLICATIVE = 20
_PREFIX = 30


class Token(NamedTuple):
    type: str
    value: Union[str, int]
    position: int


_TOKEN_SPEC = [
    ("WS", r"\s+"),
    ("INT", r"\d+"),
    ("IDENT", r"[A-Za-z]+"),
    ("OP", r"[<>^(),=/+\-*]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character '{text[position]}'", position)
        kind = match.lastgroup
        if kind == "INT":
            tokens.append(Token("INT", int(match.group()), position))
        elif kind == "IDENT":
            tokens.append(Token("IDENT", match.group(), position))
        elif kind == "OP":
            tokens.append(Token(match.group(), match.group(), position))
        position = match.end()
    tokens.append(Token("end", "end", len(text)))
    return tokens


# Parse tree
@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Angle:
    value: Fraction


@dataclass(frozen=True)
class Hyperbolic:
    pass


@dataclass(frozen=True)
class Atom:
    """Named variety atom; `args` holds the integer parameters (Fractions for Et)"""

    name: str
    args: Tuple[Union[int, Fraction], ...] = ()


@dataclass(frozen=True)
class Sym:
    n: int
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


Node = Union[Num, Angle, Hyperbolic, Atom, Sym, BinOp, Neg]

_ATOM_NAMES = ("Pt", "A", "P", "Gm", "Curve", "Et", "Ab", "Sym")
_GW_START = ("<a>", "H", "INT", "(", "-")
_VARIETY_START = _ATOM_NAMES + ("INT", "(", "-")
_BINDING = {"+": _ADDITIVE, "-": _ADDITIVE, "*": _MULTIPLICATIVE}


class _Parser:
    def __init__(self, text: str, kind: str):
        if kind not in KINDS:
            raise InvalidArgument(f"unknown expression kind '{kind}' (expected one of {KINDS})", context="cli.grammar")
        self.kind = kind
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def expect(self, type_: str) -> Token:
        if self.token.type != type_:
            raise ParseError(f"unexpected '{self.token.value}'", self.token.position, [type_])
        return self.advance()

    def starts(self) -> Tuple[str, ...]:
        return _GW_START if self.kind == "gw" else _VARIETY_START

    def parse(self) -> Node:
        tree = self.expression(0)
        if self.token.type != "end":
            raise ParseError(f"unexpected '{self.token.value}'", self.token.position, ["+", "-", "*", "end"])
        return tree

    def expression(self, rbp: int) -> Node:
        left = self.nud(self.advance())
        while rbp < _BINDING.get(self.token.type, 0):
            op = self.advance().type
            left = BinOp(op, left, self.expression(_BINDING[op]))
        return left

    def nud(self, token: Token) -> Node:
        if token.type == "-":
            return Neg(self.expression(_PREFIX))
        if token.type == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        if token.type == "INT":
            return Num(token.value)
        if self.kind == "gw":
            if token.type == "<":
                return self.angle(token)
            if token.type == "IDENT" and token.value == "H":
                return Hyperbolic()
        elif token.type == "IDENT" and token.value in _ATOM_NAMES:
            return self.atom(token.value)
        found = "end of input" if token.type == "end" else f"'{token.value}'"
        raise ParseError(f"unexpected {found}", token.position, self.starts())

    def signed_number(self) -> Fraction:
        sign = -1 if self.token.type == "-" else 1
        if sign < 0:
            self.advance()
        value = Fraction(self.expect("INT").value)
        if self.token.type == "/":
            self.advance()
            denominator = self.expect("INT")
            if denominator.value == 0:
                raise ParseError("zero denominator", denominator.position)
            value /= denominator.value
        return sign * value

    def angle(self, opening: Token) -> Angle:
        value = self.signed_number()
        self.expect(">")
        if value == 0:
            raise ParseError("zero square class: <0> is not a form", opening.position)
        return Angle(value)

    def exponent(self) -> int:
        self.expect("^")
        return self.expect("INT").value

    def atom(self, name: str) -> Node:
        if name in ("Pt", "Gm"):
            return Atom(name)
        if name in ("A", "P"):
            return Atom(name, (self.exponent(),))
        if name == "Sym":
            n = self.exponent()
            self.expect("(")
            operand = self.expression(0)
            self.expect(")")
            return Sym(n, operand)
        self.expect("(")
        if name == "Curve":
            if self.token.type == "IDENT" and self.token.value == "g":
                self.advance()
                self.expect("=")
            args: Tuple = (self.expect("INT").value,)
        elif name == "Ab":
            args = (self.expect("INT").value,)
        else:
            values = [self.signed_number()]
            while self.token.type == ",":
                self.advance()
                values.append(self.signed_number())
            args = tuple(values)
        self.expect(")")
        return Atom(name, args)


def parse_expression(text: str, kind: str) -> Node:
    """
    Parse an expression of the given kind

    Args:
        text: Source text
        kind: "gw" or "variety"

    Returns:
        Parse tree; `*` binds tighter than `+`/`-`, both left associative

    Raises:
        ParseError: With the offending position and the expected-token set
    """
    return _Parser(text, kind).parse()


# Pretty-printer
def _number(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _binding(node: Node) -> int:
    if isinstance(node, BinOp):
        return _BINDING[node.op]
    return 100


def print_tree(node: Node) -> str:
    """Canonical text of a tree with only the parentheses the parser needs"""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Angle):
        return f"<{_number(node.value)}>"
    if isinstance(node, Hyperbolic):
        return "H"
    if isinstance(node, Atom):
        if node.name in ("Pt", "Gm"):
            return node.name
        if node.name in ("A", "P"):
            return f"{node.name}^{node.args[0]}"
        if node.name == "Curve":
            return f"Curve(g={node.args[0]})"
        return f"{node.name}({','.join(_number(a) for a in node.args)})"
    if isinstance(node, Sym):
        return f"Sym^{node.n}({print_tree(node.operand)})"
    if isinstance(node, Neg):
        inner = print_tree(node.operand)
        return f"-({inner})" if isinstance(node.operand, BinOp) else f"-{inner}"
    power = _BINDING[node.op]
    left = print_tree(node.left)
    if _binding(node.left) < power:
        left = f"({left})"
    right = print_tree(node.right)
    if _binding(node.right) <= power:
        right = f"({right})"
    separator = "*" if node.op == "*" else f" {node.op} "
    return f"{left}{separator}{right}"


def scalar_literals(node: Node) -> List[Fraction]:
    """Every square-class scalar written in a tree: the values of <a> and the Et generators"""
    if isinstance(node, Angle):
        return [node.value]
    if isinstance(node, Atom):
        return [Fraction(a) for a in node.args] if node.name == "Et" else []
    if isinstance(node, (Sym, Neg)):
        return scalar_literals(node.operand)
    if isinstance(node, BinOp):
        return scalar_literals(node.left) + scalar_literals(node.right)
    return []


# Evaluation
def evaluate_gw(node: Node, field: BaseField) -> GwElement:
    """Value of a gw tree in GW(field)"""
    if isinstance(node, Num):
        return GwElement.from_int(field, node.value)
    if isinstance(node, Angle):
        return GwElement.of(field, node.value)
    if isinstance(node, Hyperbolic):
        return GwElement.hyperbolic(field)
    if isinstance(node, Neg):
        return -evaluate_gw(node.operand, field)
    if isinstance(node, BinOp):
        return _apply(node.op, evaluate_gw(node.left, field), evaluate_gw(node.right, field))
    raise InvalidArgument(f"'{print_tree(node)}' is not a GW expression", context="cli.grammar")


def _atom_class(node: Atom, field: BaseField) -> VarietyClass:
    if node.name == "Pt":
        return VarietyClass.from_atom(field, Point())
    if node.name == "Gm":
        return VarietyClass.from_atom(field, Torus())
    if node.name == "A":
        return VarietyClass.from_atom(field, Affine(node.args[0]))
    if node.name == "P":
        return VarietyClass.from_atom(field, Projective(node.args[0]))
    if node.name == "Curve":
        return VarietyClass.from_atom(field, Curve(node.args[0]))
    if node.name == "Ab":
        return VarietyClass.from_atom(field, AbelianVariety(node.args[0]))
    return VarietyClass.etale(field, list(node.args))


def evaluate_variety(node: Node, field: BaseField) -> VarietyClass:
    """
    Value of a variety tree in the fragment

    Sym^n of a single curve stays an opaque Sym^n(Curve) atom; Sym^n of anything else is
    expanded geometrically and so needs a fragment class.
    """
    if isinstance(node, Num):
        return VarietyClass.from_int(field, node.value)
    if isinstance(node, Atom):
        return _atom_class(node, field)
    if isinstance(node, Sym):
        if isinstance(node.operand, Atom) and node.operand.name == "Curve":
            return VarietyClass.opaque(field, SymCurve(node.operand.args[0], node.n))
        return sym_class(evaluate_variety(node.operand, field), node.n)
    if isinstance(node, Neg):
        return -evaluate_variety(node.operand, field)
    if isinstance(node, BinOp):
        return _apply(node.op, evaluate_variety(node.left, field), evaluate_variety(node.right, field))
    raise InvalidArgument(f"'{print_tree(node)}' is not a variety expression", context="cli.grammar")


def _apply(op: str, x, y):
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    return x * y


def parse_gw(text: str, field: BaseField) -> GwElement:
    return evaluate_gw(parse_expression(text, "gw"), field)


def parse_variety(text: str, field: BaseField) -> VarietyClass:
    return evaluate_variety(parse_expression(text, "variety"), field)


__all__ = [
    "KINDS",
    "Token",
    "tokenize",
    "Num",
    "Angle",
    "Hyperbolic",
    "Atom",
    "Sym",
    "BinOp",
    "Neg",
    "Node",
    "parse_expression",
    "print_tree",
    "scalar_literals",
    "evaluate_gw",
    "evaluate_variety",
    "parse_gw",
    "parse_variety",
]
