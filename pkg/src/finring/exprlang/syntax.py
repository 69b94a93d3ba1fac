"""Lexer, recursive-descent parser and canonical printer for ring and group expressions.

Grammar (names are case-insensitive, whitespace is ignored):

    expr     = NAME [ "(" [ arg { "," arg } ] ")" ] ;
    arg      = INT | list | expr ;
    list     = "[" [ INT { "," INT } ] "]" ;
    NAME     = letter { letter | digit } ;
    INT      = digit { digit } ;

The canonical form prints every name in its canonical spelling with no whitespace, so
print_expr(parse(text)) is a fixed point of parse-then-print.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from finring.exprlang.errors import ArityError, ParseError, UnknownName


MAX_EXPRESSION_LENGTH = 4096


class NodeKind(Enum):
    Z = "Z"
    GF = "GF"
    M = "M"
    T = "T"
    PROD = "Prod"
    TRIV_EXT = "TrivExt"
    QUOT = "Quot"
    CORNER = "Corner"
    GR = "GR"
    C = "C"
    GPROD = "GProd"
    S3 = "S3"


GROUP_KINDS = frozenset({NodeKind.C, NodeKind.GPROD, NodeKind.S3})

# Argument sorts per kind; Prod and GProd take two or more rings or groups instead.
SIGNATURES: Dict[NodeKind, Tuple[str, ...]] = {
    NodeKind.Z: ("int",),
    NodeKind.GF: ("int", "int"),
    NodeKind.M: ("int", "ring"),
    NodeKind.T: ("int", "ring"),
    NodeKind.TRIV_EXT: ("ring",),
    NodeKind.QUOT: ("ring", "list"),
    NodeKind.CORNER: ("ring", "int"),
    NodeKind.GR: ("ring", "group"),
    NodeKind.C: ("int",),
    NodeKind.S3: (),
}

NAMES_BY_LOWER = {kind.value.lower(): kind for kind in NodeKind}


@dataclass(frozen=True)
class ExprNode(object):
    """One node of an expression tree.  Arguments are ints, tuples of ints (element lists) or
    child nodes.  Spans are (start, end) offsets into the parsed text and do not take part in
    equality."""

    kind: NodeKind
    args: Tuple["Arg", ...] = ()
    span: Tuple[int, int] = field(default=(0, 0), compare=False)

    @property
    def sort(self) -> str:
        return "group" if self.kind in GROUP_KINDS else "ring"

    def children(self) -> List["ExprNode"]:
        return [arg for arg in self.args if isinstance(arg, ExprNode)]

    def __str__(self) -> str:
        return print_expr(self)


Arg = Union[int, Tuple[int, ...], ExprNode]


@dataclass(frozen=True)
class Token(object):
    kind: str
    text: str
    position: int


_TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>[0-9]+)|(?P<punct>[(),\[\]]))"
)
_TRAILING_SPACE = re.compile(r"\s*")


def tokenize(text: str) -> List[Token]:
    """Splits text into tokens, ending with a single "end" token.

    Raises:
        ParseError: a character no token can start with.
    """
    tokens = []
    position = 0
    while True:
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            position = _TRAILING_SPACE.match(text, position).end()  # type: ignore
            if position < len(text):
                raise ParseError(position, frozenset({"name", "int", "(", ")", ",", "[", "]"}))
            tokens.append(Token("end", "", position))
            return tokens
        kind = match.lastgroup or "punct"
        value = match.group(kind)
        tokens.append(Token(kind if kind != "punct" else value, value, match.start(kind)))
        position = match.end()


class Parser(object):
    """Recursive-descent parser over a token list with a one-token lookahead."""

    def __init__(self, text: str):
        if len(text) > MAX_EXPRESSION_LENGTH:
            raise ParseError(
                MAX_EXPRESSION_LENGTH, frozenset({f"at most {MAX_EXPRESSION_LENGTH} characters"})
            )
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.index]

    def pop(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def expect(self, *kinds: str) -> Token:
        token = self.peek
        if token.kind not in kinds:
            raise ParseError(token.position, frozenset(kinds))
        return self.pop()

    def parse(self) -> ExprNode:
        node = self.expression()
        self.expect("end")
        return node

    def expression(self) -> ExprNode:
        name = self.expect("name")
        kind = NAMES_BY_LOWER.get(name.text.lower())
        if kind is None:
            raise UnknownName(name.text, name.position)

        args: List[Arg] = []
        spans: List[int] = []
        if self.peek.kind == "(":
            self.pop()
            if self.peek.kind != ")":
                spans.append(self.peek.position)
                args.append(self.argument())
                while self.peek.kind == ",":
                    self.pop()
                    spans.append(self.peek.position)
                    args.append(self.argument())
            end = self.expect(")").position + 1
        else:
            end = name.position + len(name.text)
        return _typed_node(kind, tuple(args), (name.position, end), spans)

    def argument(self) -> Arg:
        token = self.peek
        if token.kind == "int":
            self.pop()
            return int(token.text)
        if token.kind == "[":
            return self.element_list()
        if token.kind == "name":
            return self.expression()
        raise ParseError(token.position, frozenset({"int", "[", "name"}))

    def element_list(self) -> Tuple[int, ...]:
        self.expect("[")
        elements = []
        if self.peek.kind != "]":
            elements.append(int(self.expect("int").text))
            while self.peek.kind == ",":
                self.pop()
                elements.append(int(self.expect("int").text))
        self.expect("]")
        return tuple(elements)


def _sort_of(arg: Arg) -> str:
    if isinstance(arg, ExprNode):
        return arg.sort
    if isinstance(arg, tuple):
        return "list"
    return "int"


def _typed_node(
    kind: NodeKind, args: Tuple[Arg, ...], span: Tuple[int, int], starts: Optional[List[int]] = None
) -> ExprNode:
    """Checks the argument sorts of one node; Prod over groups becomes GProd."""
    sorts = [_sort_of(arg) for arg in args]
    name = kind.value
    if kind in (NodeKind.PROD, NodeKind.GPROD):
        if len(args) < 2:
            raise ArityError(name, "two or more rings or two or more groups", len(args), span[0])
        if all(sort == "group" for sort in sorts):
            kind = NodeKind.GPROD
        elif all(sort == "ring" for sort in sorts) and kind is NodeKind.PROD:
            pass
        else:
            raise ArityError(name, "arguments that are all rings or all groups", len(args), span[0])
        return ExprNode(kind, args, span)

    expected = SIGNATURES[kind]
    if tuple(sorts) != expected:
        position = span[0]
        for i, (got, wanted) in enumerate(zip(sorts, expected)):
            if got != wanted and starts:
                position = starts[i]
                break
        description = ", ".join(expected) if expected else "no arguments"
        raise ArityError(name, description, len(args), position)
    return ExprNode(kind, args, span)


def parse(text: str) -> ExprNode:
    """Parses one expression.

    Raises:
        ParseError: malformed text, with the position and the set of expected tokens.
        UnknownName: a name that is not a construction.
        ArityError: a construction applied to the wrong number or sort of arguments.
    """
    return Parser(text).parse()


def node(kind: NodeKind, *args: Arg) -> ExprNode:
    """Builds a node programmatically, with the same sort checks as the parser."""
    return _typed_node(kind, tuple(args), (0, 0))


def _print_arg(arg: Arg) -> str:
    if isinstance(arg, ExprNode):
        return print_expr(arg)
    if isinstance(arg, tuple):
        return "[" + ",".join(str(a) for a in arg) + "]"
    return str(arg)


def print_expr(expr: ExprNode) -> str:
    """The canonical text of an expression.  GProd prints as Prod, which parses back to GProd."""
    name = NodeKind.PROD.value if expr.kind is NodeKind.GPROD else expr.kind.value
    if expr.kind is NodeKind.S3:
        return name
    return name + "(" + ",".join(_print_arg(arg) for arg in expr.args) + ")"


def canonical(text: str) -> str:
    return print_expr(parse(text))
