"""Claims about √J(R) itself: how it behaves under products of commuting elements, powers,
homomorphic images and quotients, and how it sits between Nil(R), J(R) and the units."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from finring.constructions import Ideal, ProductProvenance, ideal_generated, quotient
from finring.radicals import jacobson_by_maximal_ideals
from finring.rings import FiniteRing
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.registry import Claim, claim, least_violation
from finring.theorems.report import ClaimOutcome


logger = logging.getLogger(__name__)

SURJECTIVE_KINDS = ("product", "quotient", "group-ring")


def ideals_inside_jacobson(
    context: AuditContext, ring: FiniteRing
) -> List[Tuple[Optional[int], Ideal]]:
    """The ideals I ⊆ J(R) the transfer claims quantify over, each with its generator.

    Up to limits.local_order these are J(R) and every ideal generated by one element of J(R);
    above it only J(R).  J(R) itself carries no generator.
    """
    profile = context.profile(ring)
    found: List[Tuple[Optional[int], Ideal]] = [(None, profile.jacobson_ideal)]
    if ring.order > context.limits.local_order:
        return found
    seen = {profile.jacobson_ideal.members}
    for x in np.flatnonzero(profile.jacobson):
        ideal = ideal_generated(ring, [int(x)])
        if ideal.members not in seen:
            seen.add(ideal.members)
            found.append((int(x), ideal))
    return found


@claim(
    "L2.1",
    "A surjective ring homomorphism f: R → S maps √J(R) into √J(S).",
    per_presentation=True,
)
class SurjectionImage(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return entry.ring.provenance.kind in SURJECTIVE_KINDS

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        related = []
        # a quotient records the projection onto itself, the other kinds map the ring onward
        for name, hom in ring.provenance.surjections(ring):
            roots = context.profile(hom.source).sqrt_jacobson
            target_roots = context.profile(hom.target).sqrt_jacobson
            other = hom.source if hom.target.digest == ring.digest else hom.target
            related.append(other.digest)
            escaped = roots & ~target_roots[hom.map]
            failure = self.violation(entry, escaped, f"{name} maps it outside √J", related)
            if failure:
                return failure
        return self.passed(entry, related=related)


@claim("L1.2-1", "If a ∈ √J(R) and ab = ba then ab ∈ √J(R).")
class CommutingProducts(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        roots = context.profile(ring).sqrt_jacobson
        commuting = ring.mul == ring.mul.T
        violations = roots[:, None] & commuting & ~roots[ring.mul]
        return self.violation(entry, violations, "(a, b) commute, ab ∉ √J") or self.passed(entry)


@claim("L1.2-2", "a^n ∈ √J(R) if and only if a ∈ √J(R), for every n ≥ 1.")
class Powers(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        roots = context.profile(ring).sqrt_jacobson
        everything = np.arange(ring.order)
        first_bad = np.zeros(ring.order, dtype=np.int64)
        current = everything.copy()
        for k in range(1, ring.order + 1):
            differs = (roots[current] != roots) & (first_bad == 0)
            first_bad[differs] = k
            current = ring.mul[current, everything]
        x = least_violation(first_bad > 0)
        if x is None:
            return self.passed(entry)
        k = int(first_bad[x[0]])
        return self.failed(entry, (x[0], k), f"x^{k} and x disagree on membership in √J")


@claim("L1.2-3", "If a ∈ √J(R) then 1 - a is a unit.")
class OneMinus(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        one_minus = ring.add[ring.one][ring.neg]
        violations = profile.sqrt_jacobson & ~profile.units[one_minus]
        return self.violation(entry, violations, "1 - a is not a unit") or self.passed(entry)


@claim("L1.2-4", "√J(R) ∩ C(R) ⊆ J(R), so √J(R) = J(R) when R is commutative.")
class CentralRoots(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        profile = context.profile(entry.ring)
        roots, jacobson = profile.sqrt_jacobson, profile.jacobson
        central = roots & profile.center & ~jacobson
        failure = self.violation(entry, central, "central element of √J outside J")
        if failure:
            return failure
        if profile.commutative:
            failure = self.violation(entry, roots != jacobson, "√J differs from J on a commutative ring")
        return failure or self.passed(entry)


@claim("L1.2-5", "For an ideal I ⊆ J(R), √J(R/I) is the image of √J(R).")
class QuotientRoots(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        roots = context.profile(ring).sqrt_jacobson
        related = []
        for generator, ideal in ideals_inside_jacobson(context, ring):
            image, projection = quotient(ring, ideal, context.limits)
            related.append(image.digest)
            mismatch = projection.image(roots) != context.profile(image).sqrt_jacobson
            y = least_violation(mismatch)
            if y is not None:
                which = "J(R)" if generator is None else f"the ideal generated by {generator}"
                elements = (y[0],) if generator is None else (generator, y[0])
                return self.failed(
                    entry, elements, f"quotient by {which}: coset {y[0]} disagrees", related
                )
        return self.passed(entry, related=related)


@claim(
    "L1.2-6",
    "√J of a direct product is the product of the √J of the factors.",
    per_presentation=True,
)
class ProductRoots(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return isinstance(entry.ring.provenance, ProductProvenance)

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        provenance = ring.provenance
        assert isinstance(provenance, ProductProvenance)
        componentwise = np.ones(ring.order, dtype=bool)
        for projection in provenance.projections:
            componentwise &= context.profile(projection.target).sqrt_jacobson[projection.map]
        related = [factor.digest for factor in provenance.factors]
        mismatch = context.profile(ring).sqrt_jacobson != componentwise
        return self.violation(
            entry, mismatch, "membership differs from the componentwise test", related
        ) or self.passed(entry, related=related)


@claim("L1.2-7", "If ab ∈ √J(R) then ba ∈ √J(R).")
class SwappedProducts(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        roots = context.profile(ring).sqrt_jacobson
        violations = roots[ring.mul] & ~roots[ring.mul.T]
        return self.violation(entry, violations, "ab ∈ √J but ba ∉ √J") or self.passed(entry)


@claim("L1.2-8", "Nil(R) + J(R) ⊆ √J(R).")
class NilPlusJacobson(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        nil, jacobson = np.flatnonzero(profile.nilpotents), np.flatnonzero(profile.jacobson)
        sums = ring.add[np.ix_(nil, jacobson)]
        outside = least_violation(~profile.sqrt_jacobson[sums])
        if outside is None:
            return self.passed(entry)
        n, j = int(nil[outside[0]]), int(jacobson[outside[1]])
        return self.failed(entry, (n, j), "nilpotent + radical element outside √J")


@claim(
    "J-oracle",
    "On a commutative ring J(R) is the intersection of the maximal ideals.",
)
class MaximalIdealOracle(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        if not profile.commutative:
            return self.not_applicable(entry)
        if ring.order > context.limits.local_order:
            return self.skipped(entry)
        oracle = jacobson_by_maximal_ideals(ring).mask(ring.order)
        return self.violation(
            entry, oracle != profile.jacobson, "quasi-regular and maximal-ideal J differ"
        ) or self.passed(entry)
