"""The audit: every checkable claim about W√JU rings, the catalog they are checked over, and the
report.

Importing this package registers the claims.  The claim modules are imported in a fixed order,
which is the order claims appear in reports."""

from finring.theorems.report import ClaimOutcome, ClaimStatus, ClaimSummary, Report, Witness
from finring.theorems.catalog import Catalog, CatalogConfig, CatalogEntry, build_catalog
from finring.theorems.context import AuditContext
from finring.theorems.registry import (
    CLAIMS_BY_ID,
    Claim,
    UnknownClaim,
    all_claims,
    claim,
    get_claim,
    least_violation,
)
from finring.theorems import radical_claims  # noqa: F401
from finring.theorems import transfer_claims  # noqa: F401
from finring.theorems import structure_claims  # noqa: F401
from finring.theorems import group_claims  # noqa: F401
from finring.theorems.suite import check_claim, run_suite

__all__ = [
    "AuditContext",
    "CLAIMS_BY_ID",
    "Catalog",
    "CatalogConfig",
    "CatalogEntry",
    "Claim",
    "ClaimOutcome",
    "ClaimStatus",
    "ClaimSummary",
    "Report",
    "UnknownClaim",
    "Witness",
    "all_claims",
    "build_catalog",
    "check_claim",
    "claim",
    "get_claim",
    "least_violation",
    "run_suite",
]
