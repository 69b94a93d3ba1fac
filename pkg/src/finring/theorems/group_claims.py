"""Claims about group rings RG."""

import logging
from typing import Optional

import numpy as np

from finring.constructions import GroupRingProvenance, augmentation, corner
from finring.groups import FiniteGroup, element_orders, group_prime, is_p_group, is_trivial
from finring.rings import FiniteRing
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.registry import Claim, claim
from finring.theorems.report import ClaimOutcome, Witness
from finring.util import InternalInconsistency


logger = logging.getLogger(__name__)

W = "w_sqrt_ju"
SQRT_JU = "sqrt_ju"


class GroupRingClaim(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return isinstance(entry.ring.provenance, GroupRingProvenance)

    @staticmethod
    def parts(entry: CatalogEntry) -> tuple:
        provenance = entry.ring.provenance
        assert isinstance(provenance, GroupRingProvenance)
        return provenance.base, provenance.group


def _is_some_p_group(group: FiniteGroup) -> bool:
    return is_trivial(group) or group_prime(group) is not None


@claim("G-l1", "If RG is W√JU then R is W√JU.", per_presentation=True)
class BaseRing(GroupRingClaim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base, _ = self.parts(entry)
        if not context.holds(entry.ring, W):
            return self.not_applicable(entry)
        if not context.holds(base, W):
            return self.failed(entry, (), "RG is W√JU but R is not", [base.digest])
        return self.passed(entry, related=[base.digest])


@claim("G-torsion", "If RG is W√JU then G is a torsion group.", per_presentation=True)
class Torsion(GroupRingClaim):
    """Every finite group is torsion; the check records the element orders it found."""

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        _, group = self.parts(entry)
        orders = element_orders(group)
        return self.passed(entry, Witness((), f"largest element order {max(orders)}"))


@claim("G-2gr", "If RG is W√JU and 2 ∈ J(R) then G is a 2-group.", per_presentation=True)
class TwoGroup(GroupRingClaim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base, group = self.parts(entry)
        if not (context.holds(entry.ring, W) and context.multiple_in(base, 2, "jacobson")):
            return self.not_applicable(entry)
        if not is_p_group(group, 2):
            return self.failed(entry, (), f"{group.label} is not a 2-group", [base.digest])
        return self.passed(entry, related=[base.digest])


@claim(
    "G-3gr",
    "If RG is W√JU, 3 ∈ J(R) and G is a p-group, then G is a 3-group.",
    per_presentation=True,
)
class ThreeGroup(GroupRingClaim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base, group = self.parts(entry)
        hypothesis = (
            _is_some_p_group(group)
            and context.holds(entry.ring, W)
            and context.multiple_in(base, 3, "jacobson")
        )
        if not hypothesis:
            return self.not_applicable(entry)
        if not is_p_group(group, 3):
            return self.failed(entry, (), f"{group.label} is not a 3-group", [base.digest])
        return self.passed(entry, related=[base.digest])


def split_witness(context: AuditContext, ring: FiniteRing) -> Optional[int]:
    """A central idempotent e ∉ {0, 1} with one of eR, (1-e)R √JU and the other W√JU, if any.

    R ≅ eR × (1-e)R for a central idempotent, so this decides whether R is a product of a √JU
    ring and a W√JU ring with both factors nonzero.
    """
    profile = context.profile(ring)
    candidates = np.flatnonzero(profile.idempotents & profile.center)
    for candidate in candidates:
        e = int(candidate)
        if e in (ring.zero, ring.one):
            continue
        first = corner(ring, e, context.limits)
        second = corner(ring, ring.sub(ring.one, e), context.limits)
        strong = (context.holds(first, SQRT_JU), context.holds(second, SQRT_JU))
        weak = (context.holds(first, W), context.holds(second, W))
        if (strong[0] and weak[1]) or (strong[1] and weak[0]):
            return e
    return None


@claim(
    "T-groupring",
    "For a p-group G, RG is W√JU exactly when R is √JU and G a 2-group, or R is W√JU with "
    "3 ∈ J(R) and G a 3-group, or R is a product of a √JU ring and a W√JU ring and G is trivial.",
    per_presentation=True,
)
class GroupRingCharacterisation(GroupRingClaim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base, group = self.parts(entry)
        if not _is_some_p_group(group):
            return self.not_applicable(entry)
        first = context.holds(base, SQRT_JU) and is_p_group(group, 2)
        second = (
            context.holds(base, W)
            and context.multiple_in(base, 3, "jacobson")
            and is_p_group(group, 3)
        )
        third = is_trivial(group) and split_witness(context, base) is not None
        return self.agree(
            entry,
            {
                "RG W√JU": context.holds(entry.ring, W),
                "one of the three conditions": first or second or third,
            },
            [base.digest],
        )


@claim(
    "G-eps",
    "The augmentation RG → R is a surjective ring homomorphism whose kernel has |RG|/|R| elements.",
    per_presentation=True,
)
class Augmentation(GroupRingClaim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base, _ = self.parts(entry)
        try:
            epsilon, kernel = augmentation(entry.ring)
        except InternalInconsistency as ex:
            return self.failed(entry, (), str(ex), [base.digest])
        if not epsilon.is_surjective():
            return self.failed(entry, (), "augmentation is not onto R", [base.digest])
        if len(kernel) * base.order != entry.ring.order:
            return self.failed(
                entry,
                (),
                f"|Δ| = {len(kernel)}, expected {entry.ring.order // base.order}",
                [base.digest],
            )
        return self.passed(entry, related=[base.digest])
