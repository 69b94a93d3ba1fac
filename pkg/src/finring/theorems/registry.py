"""The claim base class and the registry the claim modules fill in.

A claim is registered with the @claim decorator, which records one instance per id in a module
dictionary.  Registration order is the report order, so it has to stay deterministic: the claim
modules are imported in a fixed order by the package."""

import logging
from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Type, TypeVar

import numpy as np

from finring.classify import Verdict
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.report import ClaimOutcome, ClaimStatus, Witness
from finring.util import FinringError


logger = logging.getLogger(__name__)

CLAIMS_BY_ID: Dict[str, "Claim"] = {}


class UnknownClaim(FinringError):
    def __init__(self, claim_id: str):
        super().__init__(f"no claim called {claim_id!r}; known claims: {', '.join(CLAIMS_BY_ID)}")
        self.claim_id = claim_id


def least_violation(violations: np.ndarray) -> Optional[Tuple[int, ...]]:
    """The lexicographically least index tuple where violations is True, if any."""
    found = np.argwhere(violations)
    if len(found) == 0:
        return None
    return tuple(int(i) for i in found[0])


class Claim(ABC):
    """One checkable statement about finite rings.

    Subclasses set claim_id and anchor through @claim, narrow the subjects they speak about with
    applies_to, and implement check.  When per_presentation is set the claim also runs on catalog
    aliases, because it reads how a ring was constructed rather than only its tables.
    """

    claim_id = ""
    anchor = ""
    per_presentation = False

    def applies_to(self, entry: CatalogEntry) -> bool:
        return True

    @abstractmethod
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        pass

    def outcome(
        self,
        entry: CatalogEntry,
        status: ClaimStatus,
        witness: Optional[Witness] = None,
        related: Sequence[str] = (),
    ) -> ClaimOutcome:
        return ClaimOutcome(
            self.claim_id, (entry.digest,) + tuple(related), status, witness, entry.expression
        )

    def passed(
        self, entry: CatalogEntry, witness: Optional[Witness] = None, related: Sequence[str] = ()
    ) -> ClaimOutcome:
        return self.outcome(entry, ClaimStatus.PASS, witness, related)

    def failed(
        self,
        entry: CatalogEntry,
        elements: Sequence[int] = (),
        note: str = "",
        related: Sequence[str] = (),
    ) -> ClaimOutcome:
        logger.warning("%s fails on %s: %s %s", self.claim_id, entry.expression, list(elements), note)
        return self.outcome(entry, ClaimStatus.FAIL, Witness(tuple(elements), note), related)

    def skipped(self, entry: CatalogEntry) -> ClaimOutcome:
        return self.outcome(entry, ClaimStatus.SKIPPED)

    def not_applicable(self, entry: CatalogEntry) -> ClaimOutcome:
        return self.outcome(entry, ClaimStatus.NOT_APPLICABLE)

    def violation(
        self,
        entry: CatalogEntry,
        violations: np.ndarray,
        note: str,
        related: Sequence[str] = (),
    ) -> Optional[ClaimOutcome]:
        """A failed outcome at the least violating tuple, or None when there is none."""
        least = least_violation(violations)
        if least is None:
            return None
        return self.failed(entry, least, note, related)

    def agree(
        self,
        entry: CatalogEntry,
        statements: Dict[str, Verdict],
        related: Sequence[str] = (),
    ) -> ClaimOutcome:
        """Passes when every statement has the same truth value; skipped when one was skipped."""
        if any(value is None for value in statements.values()):
            return self.skipped(entry)
        if len(set(statements.values())) > 1:
            listed = ", ".join(f"{name}={value}" for name, value in statements.items())
            return self.failed(entry, (), listed, related)
        return self.passed(entry, related=related)

    def __repr__(self) -> str:
        return f"<Claim {self.claim_id}>"


C = TypeVar("C", bound=Type[Claim])


def claim(claim_id: str, anchor: str, per_presentation: bool = False) -> Callable[[C], C]:
    """Decorator registering a Claim subclass under claim_id.

    Arguments:
        claim_id {str} -- Stable id used on the command line and in reports.
        anchor {str} -- The statement being checked, in a sentence.

    Keyword Arguments:
        per_presentation {bool} -- Also check catalog aliases (default: {False})

    Returns:
        Callable[[C], C] -- Decorator that records an instance of the class and returns the class unchanged.
    """

    def claim_decorator(klass: C) -> C:
        if claim_id in CLAIMS_BY_ID:
            raise ValueError(f"claim {claim_id} registered twice")
        klass.claim_id = claim_id
        klass.anchor = anchor
        klass.per_presentation = per_presentation
        CLAIMS_BY_ID[claim_id] = klass()
        return klass

    return claim_decorator


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS_BY_ID[claim_id]
    except KeyError as ex:
        raise UnknownClaim(claim_id) from ex


def all_claims() -> List[Claim]:
    return list(CLAIMS_BY_ID.values())
