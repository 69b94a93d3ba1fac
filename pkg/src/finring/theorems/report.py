"""Outcomes of individual claim checks and the aggregated audit report."""

import shlex
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from finring.util import Limits


class ClaimStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped(size)"
    NOT_APPLICABLE = "not-applicable"


class Witness(object):
    """Elements (indices in the subject ring's encoding) that demonstrate an outcome.

    For a failed universally quantified claim this is the lexicographically least violating tuple."""

    def __init__(self, elements: Sequence[int] = (), note: str = "", expression: str = ""):
        self.elements: Tuple[int, ...] = tuple(int(e) for e in elements)
        self.note = note
        self.expression = expression

    def recheck(self, claim_id: str) -> str:
        command = ["finring", "verify", "--claims", claim_id]
        if self.expression:
            command += ["--expr", self.expression]
        return " ".join(shlex.quote(part) for part in command)

    def __repr__(self) -> str:
        return f"<Witness {self.expression} {list(self.elements)} {self.note!r}>"


class ClaimOutcome(object):
    def __init__(
        self,
        claim_id: str,
        subjects: Sequence[str],
        status: ClaimStatus,
        witness: Optional[Witness] = None,
        expression: str = "",
    ):
        if status is ClaimStatus.FAIL and witness is None:
            raise ValueError(f"a failed {claim_id} outcome needs a witness")
        self.claim_id = claim_id
        self.subjects: Tuple[str, ...] = tuple(subjects)
        self.status = status
        self.witness = witness
        self.expression = expression
        if witness is not None and not witness.expression:
            witness.expression = expression

    @property
    def failed(self) -> bool:
        return self.status is ClaimStatus.FAIL

    def __repr__(self) -> str:
        return f"<ClaimOutcome {self.claim_id} {self.expression} {self.status.value}>"

    def encode_json(self) -> dict:
        encoded: Dict[str, object] = {
            "id": self.claim_id,
            "expression": self.expression,
            "subjects": list(self.subjects),
            "status": self.status.value,
        }
        if self.witness is not None:
            encoded["witness"] = _encode_witness(self.claim_id, self.witness, self.subjects)
        return encoded


def _encode_witness(claim_id: str, witness: Witness, subjects: Sequence[str]) -> dict:
    return {
        "claim": claim_id,
        "expression": witness.expression,
        "hash": subjects[0] if subjects else "",
        "elements": list(witness.elements),
        "note": witness.note,
        "recheck": witness.recheck(claim_id),
    }


class ClaimSummary(object):
    """Counts per status for one claim over every subject it was checked on."""

    def __init__(self, claim_id: str, anchor: str):
        self.claim_id = claim_id
        self.anchor = anchor
        self.counts = {status: 0 for status in ClaimStatus}
        self.outcomes: List[ClaimOutcome] = []

    def add(self, outcome: ClaimOutcome) -> None:
        self.counts[outcome.status] += 1
        self.outcomes.append(outcome)

    @property
    def subjects(self) -> int:
        return len(self.outcomes)

    @property
    def failures(self) -> int:
        return self.counts[ClaimStatus.FAIL]

    def encode_json(self) -> dict:
        return {
            "id": self.claim_id,
            "anchor": self.anchor,
            "subjects": self.subjects,
            "pass": self.counts[ClaimStatus.PASS],
            "fail": self.counts[ClaimStatus.FAIL],
            "skipped": self.counts[ClaimStatus.SKIPPED],
            "not_applicable": self.counts[ClaimStatus.NOT_APPLICABLE],
            "witnesses": [
                _encode_witness(o.claim_id, o.witness, o.subjects)
                for o in self.outcomes
                if o.witness is not None
            ],
        }


class Report(object):
    def __init__(self, summaries: Iterable[ClaimSummary], catalog_size: int, config: dict, limits: Limits):
        self.summaries = list(summaries)
        self.catalog_size = catalog_size
        self.config = config
        self.limits = limits

    @property
    def failures(self) -> int:
        return sum(summary.failures for summary in self.summaries)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self, claim_id: str) -> ClaimSummary:
        for summary in self.summaries:
            if summary.claim_id == claim_id:
                return summary
        raise KeyError(claim_id)

    def encode_json(self) -> dict:
        return {
            "claims": [summary.encode_json() for summary in self.summaries],
            "catalog_size": self.catalog_size,
            "config": dict(self.config, limits=self.limits.encode_json()),
        }
