import logging
from typing import Iterable, List, Optional, Union

from finring.exprlang import canonical
from finring.rings import FiniteRing
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.registry import Claim, all_claims, get_claim
from finring.theorems.report import ClaimOutcome, ClaimSummary, Report


logger = logging.getLogger(__name__)

Subject = Union[CatalogEntry, FiniteRing, str]


def _as_entry(context: AuditContext, subject: Subject) -> CatalogEntry:
    if isinstance(subject, CatalogEntry):
        return subject
    if isinstance(subject, FiniteRing):
        return CatalogEntry(subject.label, subject)
    text = canonical(subject)
    known = context.catalog.find(text)
    return known if known is not None else CatalogEntry(text, context.evaluator.ring(text))


def check_claim(
    claim_id: str, subject: Subject, context: Optional[AuditContext] = None
) -> ClaimOutcome:
    """Checks one claim on one ring.

    Arguments:
        claim_id {str} -- A registered claim id, e.g. "P-matrix".
        subject {Subject} -- A catalog entry, a ring, or an expression naming one.

    Keyword Arguments:
        context {AuditContext} -- Shared memo and limits (default: {a fresh context})

    Raises:
        UnknownClaim: no claim has this id.
        ExpressionError: the subject expression does not parse or evaluate.

    Returns:
        ClaimOutcome -- not-applicable when the ring is outside the claim's subjects.
    """
    claim = get_claim(claim_id)
    context = context if context is not None else AuditContext()
    entry = _as_entry(context, subject)
    if not claim.applies_to(entry):
        return claim.not_applicable(entry)
    return claim.check(context, entry)


def _subjects(claim: Claim, context: AuditContext) -> List[CatalogEntry]:
    catalog = context.catalog
    entries = catalog.presentations() if claim.per_presentation else catalog.entries
    return [entry for entry in entries if claim.applies_to(entry)]


def run_suite(context: AuditContext, claim_ids: Optional[Iterable[str]] = None) -> Report:
    """Runs the selected claims (all of them by default) over the context's catalog.

    Claims run in registration order and subjects in catalog order, one at a time, so two runs over
    the same catalog give identical reports.

    Raises:
        UnknownClaim: one of claim_ids is not registered.
    """
    claims = all_claims() if claim_ids is None else [get_claim(i) for i in claim_ids]
    summaries = []
    for claim in claims:
        summary = ClaimSummary(claim.claim_id, claim.anchor)
        subjects = _subjects(claim, context)
        logger.info("checking %s on %d rings", claim.claim_id, len(subjects))
        for entry in subjects:
            summary.add(claim.check(context, entry))
        if summary.failures:
            logger.warning("%s: %d failures", claim.claim_id, summary.failures)
        summaries.append(summary)
    return Report(
        summaries, len(context.catalog), context.catalog.config.encode_json(), context.limits
    )
