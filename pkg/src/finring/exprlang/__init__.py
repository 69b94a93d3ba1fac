"""Expressions naming rings and groups, e.g. "GR(Z(3),C(3))" or "Quot(Z(6),[2])".

Element arguments (the generators of Quot, the idempotent of Corner) are element indices in the
child ring's encoding, as documented by each constructor."""

from finring.exprlang.errors import (
    ArityError,
    EvaluationError,
    ExpressionError,
    ParseError,
    UnknownName,
)
from finring.exprlang.syntax import (
    ExprNode,
    NodeKind,
    canonical,
    node,
    parse,
    print_expr,
    tokenize,
)
from finring.exprlang.evaluator import Evaluator, evaluate

__all__ = [
    "ArityError",
    "EvaluationError",
    "Evaluator",
    "ExprNode",
    "ExpressionError",
    "NodeKind",
    "ParseError",
    "UnknownName",
    "canonical",
    "evaluate",
    "node",
    "parse",
    "print_expr",
    "tokenize",
]
