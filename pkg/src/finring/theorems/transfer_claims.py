"""Claims that move the W√JU property along constructions: subrings, quotients, products,
matrix and triangular rings, corners and trivial extensions."""

import logging
from typing import Dict, Optional

import numpy as np

from finring.constructions import (
    MatrixProvenance,
    ProductProvenance,
    TriangularProvenance,
    TrivialExtensionProvenance,
    corner,
    matrix_index,
    quotient,
    subring_closure,
    subring_generated,
)
from finring.rings import FiniteRing
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.radical_claims import ideals_inside_jacobson
from finring.theorems.registry import Claim, claim
from finring.theorems.report import ClaimOutcome, Witness


logger = logging.getLogger(__name__)

W = "w_sqrt_ju"
SQRT_JU = "sqrt_ju"


def w_obstruction(context: AuditContext, ring: FiniteRing) -> Optional[int]:
    """The least unit that is neither 1 + q nor -1 + q with q ∈ √J(R)."""
    profile = context.profile(ring)
    roots = profile.sqrt_jacobson
    minus_one = ring.add[:, ring.minus_one]
    plus_one = ring.add[:, ring.one]
    bad = profile.units & ~roots[minus_one] & ~roots[plus_one]
    found = np.flatnonzero(bad)
    return int(found[0]) if len(found) else None


def _obstruction_elements(context: AuditContext, ring: FiniteRing) -> tuple:
    unit = w_obstruction(context, ring)
    return () if unit is None else (unit,)


@claim(
    "P-sub",
    "A unital subring S of a W√JU ring R with U(R) ∩ S = U(S) is W√JU.",
)
class Subrings(Claim):
    """Scans the subrings generated by at most two elements."""

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        if ring.order > context.limits.local_order:
            return self.skipped(entry)
        if not context.holds(ring, W):
            return self.not_applicable(entry)
        units = context.profile(ring).units
        seen = set()
        checked = 0
        for a in range(ring.order):
            for b in range(a, ring.order):
                seeds = np.zeros(ring.order, dtype=bool)
                seeds[[a, b]] = True
                members = subring_closure(ring, seeds)
                key = members.tobytes()
                if key in seen or members.all():
                    continue
                seen.add(key)
                subring = subring_generated(ring, [a, b], context.limits)
                inside = np.flatnonzero(members)
                if (context.profile(subring).units != units[inside]).any():
                    continue
                checked += 1
                if not context.holds(subring, W):
                    return self.failed(
                        entry,
                        (a, b),
                        "the subring generated by a and b keeps its units but is not W√JU",
                        [subring.digest],
                    )
        logger.debug("P-sub scanned %d subrings of %s", checked, entry.expression)
        return self.passed(entry)


@claim(
    "P-quot",
    "For an ideal I ⊆ J(R), R is W√JU if and only if R/I is W√JU.",
)
class Quotients(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        whole = context.holds(ring, W)
        related = []
        for generator, ideal in ideals_inside_jacobson(context, ring):
            image, _ = quotient(ring, ideal, context.limits)
            related.append(image.digest)
            if context.holds(image, W) != whole:
                which = "J(R)" if generator is None else f"the ideal generated by {generator}"
                elements = () if generator is None else (generator,)
                return self.failed(
                    entry, elements, f"R is W√JU={whole} but R modulo {which} is not", related
                )
        return self.passed(entry, related=related)


def _factors(entry: CatalogEntry) -> list:
    provenance = entry.ring.provenance
    assert isinstance(provenance, ProductProvenance)
    return provenance.factors


def _is_product(entry: CatalogEntry, sizes: tuple) -> bool:
    provenance = entry.ring.provenance
    return isinstance(provenance, ProductProvenance) and len(provenance.factors) in sizes


@claim(
    "P-prod",
    "The product of a W√JU ring and a √JU ring is W√JU.",
    per_presentation=True,
)
class WeakTimesStrong(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return _is_product(entry, (2,))

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        left, right = _factors(entry)
        related = [left.digest, right.digest]
        hypothesis = (context.holds(left, W) and context.holds(right, SQRT_JU)) or (
            context.holds(left, SQRT_JU) and context.holds(right, W)
        )
        if not hypothesis:
            return self.not_applicable(entry)
        if not context.holds(entry.ring, W):
            return self.failed(
                entry,
                _obstruction_elements(context, entry.ring),
                "unit not of the form ±1 + √J",
                related,
            )
        return self.passed(entry, related=related)


@claim(
    "P-prodchar",
    "A product is W√JU if and only if every factor is W√JU and at most one factor is not √JU.",
    per_presentation=True,
)
class ProductCharacterisation(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return _is_product(entry, (2, 3))

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        factors = _factors(entry)
        every_factor = all(context.holds(f, W) for f in factors)
        weak_ones = sum(1 for f in factors if not context.holds(f, SQRT_JU))
        return self.agree(
            entry,
            {
                "product W√JU": context.holds(entry.ring, W),
                "factors W√JU, at most one not √JU": every_factor and weak_ones <= 1,
            },
            [f.digest for f in factors],
        )


@claim(
    "C-power",
    "R^n (n ≥ 2) is W√JU if and only if R^n is √JU, if and only if R is √JU.",
    per_presentation=True,
)
class ProductPowers(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        if not _is_product(entry, (2, 3)):
            return False
        return len({f.digest for f in _factors(entry)}) == 1

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base = _factors(entry)[0]
        return self.agree(
            entry,
            {
                "R^n W√JU": context.holds(entry.ring, W),
                "R^n √JU": context.holds(entry.ring, SQRT_JU),
                "R √JU": context.holds(base, SQRT_JU),
            },
            [base.digest],
        )


@claim(
    "P-matrix",
    "M_2(R) is not W√JU; A = [[0,1],[1,1]] is a unit with A + 1 and A - 1 both units.",
    per_presentation=True,
)
class TwoByTwoMatrices(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        provenance = entry.ring.provenance
        return isinstance(provenance, MatrixProvenance) and provenance.k == 2

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        provenance = ring.provenance
        assert isinstance(provenance, MatrixProvenance)
        base = provenance.base
        a = matrix_index(base, 2, [[base.zero, base.one], [base.one, base.one]])
        identity = matrix_index(base, 2, [[base.one, base.zero], [base.zero, base.one]])
        if identity != ring.one:
            return self.failed(entry, (identity, ring.one), "identity matrix is not the ring's one")
        a_plus, a_minus = int(ring.add[a, ring.one]), int(ring.add[a, ring.minus_one])
        units = context.profile(ring).units
        shown = (a, a_plus, a_minus)
        if not units[list(shown)].all():
            return self.failed(entry, shown, "A, A + 1 and A - 1 are not all units", [base.digest])
        if context.holds(ring, W):
            return self.failed(entry, shown, "M_2(R) classified as W√JU", [base.digest])
        return self.passed(
            entry, Witness(shown, "A, A + 1 and A - 1 are units"), [base.digest]
        )


@claim(
    "P-corner",
    "Every corner ring eRe of a W√JU ring is W√JU.",
)
class Corners(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        if ring.order > context.limits.corner_order:
            return self.skipped(entry)
        if not context.holds(ring, W):
            return self.not_applicable(entry)
        related = []
        for e in np.flatnonzero(context.profile(ring).idempotents):
            if e in (ring.zero, ring.one):
                continue
            piece = corner(ring, int(e), context.limits)
            related.append(piece.digest)
            if not context.holds(piece, W):
                return self.failed(entry, (int(e),), "eRe is not W√JU", related)
        return self.passed(entry, related=related)


@claim(
    "P-uper",
    "T_n(R) is √JU exactly when R is √JU, and T_n(R) W√JU forces R √JU.",
    per_presentation=True,
)
class Triangular(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        provenance = entry.ring.provenance
        return isinstance(provenance, TriangularProvenance) and provenance.k in (2, 3)

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        provenance = entry.ring.provenance
        assert isinstance(provenance, TriangularProvenance)
        base = provenance.base
        related = [base.digest]
        outcome = self.agree(
            entry,
            {
                "R √JU": context.holds(base, SQRT_JU),
                "T_n(R) √JU": context.holds(entry.ring, SQRT_JU),
            },
            related,
        )
        if outcome.failed:
            return outcome
        if context.holds(entry.ring, W) and not context.holds(base, SQRT_JU):
            return self.failed(entry, (), "T_n(R) is W√JU but R is not √JU", related)
        return outcome


def _trivial_extension_base(entry: CatalogEntry) -> FiniteRing:
    provenance = entry.ring.provenance
    assert isinstance(provenance, TrivialExtensionProvenance)
    return provenance.base


@claim(
    "P-3.4",
    "The trivial extension T(R, R) is W√JU if and only if R is W√JU.",
    per_presentation=True,
)
class TrivialExtensions(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return isinstance(entry.ring.provenance, TrivialExtensionProvenance)

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base = _trivial_extension_base(entry)
        statements: Dict[str, Optional[bool]] = {
            "T(R,R) W√JU": context.holds(entry.ring, W),
            "R W√JU": context.holds(base, W),
        }
        return self.agree(entry, statements, [base.digest])


@claim(
    "P-extunits",
    "The units of T(R, R) are the pairs (u, m) with u a unit, so |U(T(R,R))| = |U(R)|·|R|.",
    per_presentation=True,
)
class TrivialExtensionUnits(Claim):
    def applies_to(self, entry: CatalogEntry) -> bool:
        return isinstance(entry.ring.provenance, TrivialExtensionProvenance)

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        base = _trivial_extension_base(entry)
        found = len(context.profile(entry.ring).unit_group)
        expected = len(context.profile(base).unit_group) * base.order
        if found != expected:
            return self.failed(entry, (), f"{found} units, expected {expected}", [base.digest])
        return self.passed(entry, related=[base.digest])
