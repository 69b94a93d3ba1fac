from typing import FrozenSet, Tuple

from finring.util import FinringError


class ExpressionError(FinringError):
    pass


class ParseError(ExpressionError):
    def __init__(self, position: int, expected: FrozenSet[str]):
        super().__init__(
            f"unexpected input at position {position}, expected one of: {', '.join(sorted(expected))}"
        )
        self.position = position
        self.expected = expected


class UnknownName(ExpressionError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown construction {name!r} at position {position}")
        self.name = name
        self.position = position


class ArityError(ExpressionError):
    def __init__(self, name: str, expected: str, got: int, position: int):
        super().__init__(
            f"{name} at position {position} expects {expected}, got {got} argument(s)"
        )
        self.name = name
        self.expected = expected
        self.got = got
        self.position = position


class EvaluationError(ExpressionError):
    """A construction failed; the original error is chained as __cause__."""

    def __init__(self, text: str, span: Tuple[int, int], reason: str):
        super().__init__(f"cannot build {text} (at {span[0]}..{span[1]}): {reason}")
        self.text = text
        self.span = span
