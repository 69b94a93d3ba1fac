from typing import Callable

import pytest

from finring.exprlang import Evaluator
from finring.rings import FiniteRing
from finring.theorems import AuditContext


@pytest.fixture(scope="session")
def evaluator() -> Evaluator:
    return Evaluator()


@pytest.fixture
def ring(evaluator: Evaluator) -> Callable[[str], FiniteRing]:
    """Builds the ring an expression names, sharing one memo across the test session."""
    return evaluator.ring


@pytest.fixture
def context(evaluator: Evaluator) -> AuditContext:
    return AuditContext(evaluator=evaluator)
