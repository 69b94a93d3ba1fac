"""Claims relating W√JU to the rest of the classification: Dedekind-finiteness, the
characteristic, membership of 2 and 3 in U(R) and J(R), R/J(R), and the regular and exchange
characterisations."""

import logging

import numpy as np
from sympy import factorint

from finring.classify import Verdict, lattice_violations
from finring.theorems.catalog import CatalogEntry
from finring.theorems.context import AuditContext
from finring.theorems.registry import Claim, claim
from finring.theorems.report import ClaimOutcome


logger = logging.getLogger(__name__)

W = "w_sqrt_ju"


@claim("P-dedekind", "Every W√JU ring is Dedekind-finite.")
class DedekindFinite(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        if not context.holds(ring, W):
            return self.not_applicable(entry)
        right_inverse = ring.mul == ring.one
        return self.violation(
            entry, right_inverse & ~right_inverse.T, "ab = 1 but ba ≠ 1"
        ) or self.passed(entry)


@claim(
    "L-reduced",
    "A W√JU ring with J(R) = 0 in which every nonzero right ideal has a nonzero idempotent is reduced.",
)
class Reduced(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        nonzero_idempotents = profile.idempotents.copy()
        nonzero_idempotents[ring.zero] = False
        nonzero = np.arange(ring.order) != ring.zero
        # row a of mul is the right ideal aR
        idempotent_in_ar = nonzero_idempotents[ring.mul].any(axis=1)
        hypothesis = (
            context.holds(ring, W)
            and int(profile.jacobson.sum()) == 1
            and bool(idempotent_in_ar[nonzero].all())
        )
        if not hypothesis:
            return self.not_applicable(entry)
        nilpotent = profile.nilpotents & nonzero
        return self.violation(entry, nilpotent, "nonzero nilpotent") or self.passed(entry)


@claim(
    "P-member",
    "In a W√JU ring: 3 ∈ U ⇔ 2 ∈ J, 2 ∈ U ⇔ 3 ∈ J, and 3 ∈ J forces Id(R) = {0, 1}.",
)
class TwoAndThree(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        if not context.holds(ring, W):
            return self.not_applicable(entry)
        two, three = ring.multiple_of_one(2), ring.multiple_of_one(3)
        two_unit = context.multiple_in(ring, 2, "units")
        three_unit = context.multiple_in(ring, 3, "units")
        two_in_j = context.multiple_in(ring, 2, "jacobson")
        three_in_j = context.multiple_in(ring, 3, "jacobson")
        if three_unit != two_in_j:
            return self.failed(entry, (three, two), f"3 ∈ U is {three_unit}, 2 ∈ J is {two_in_j}")
        if two_unit != three_in_j:
            return self.failed(entry, (two, three), f"2 ∈ U is {two_unit}, 3 ∈ J is {three_in_j}")
        if three_in_j:
            trivial = np.zeros(ring.order, dtype=bool)
            trivial[[ring.zero, ring.one]] = True
            extra = context.profile(ring).idempotents & ~trivial
            failure = self.violation(entry, extra, "3 ∈ J but this idempotent is neither 0 nor 1")
            if failure:
                return failure
        return self.passed(entry)


@claim("P-mino", "R is √JU if and only if R is W√JU and 2 ∈ J(R).")
class StrongCriterion(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        return self.agree(
            entry,
            {
                "√JU": context.holds(ring, "sqrt_ju"),
                "W√JU and 2 ∈ J": context.holds(ring, W)
                and context.multiple_in(ring, 2, "jacobson"),
            },
        )


@claim("L-char", "The characteristic of a W√JU ring is 2^a·3^b.")
class Characteristic(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        if not context.holds(ring, W):
            return self.not_applicable(entry)
        char = context.record(ring).characteristic
        primes = set(factorint(char))
        if not primes <= {2, 3}:
            return self.failed(
                entry, (ring.one,), f"characteristic {char} has prime factors {sorted(primes)}"
            )
        return self.passed(entry)


@claim(
    "P-3.26",
    "A W√JU division ring is Z_2 or Z_3; a ring is local and W√JU exactly when R/J(R) is Z_2 or Z_3.",
)
class DivisionAndLocal(Claim):
    """Isomorphism with Z_2 or Z_3 is decided by order: a field of order 2 or 3 is unique."""

    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        w = context.holds(ring, W)
        division = ring.order > 1 and int(profile.units.sum()) == ring.order - 1
        if division and w != (ring.order in (2, 3)):
            return self.failed(entry, (), f"division ring of order {ring.order} has W√JU={w}")
        residue, _ = profile.radical_quotient
        residue_units = len(context.profile(residue).unit_group)
        residue_field = residue.order in (2, 3) and residue_units == residue.order - 1
        return self.agree(
            entry,
            {
                "local and W√JU": context.holds(ring, "local") and w,
                "R/J is Z_2 or Z_3": residue_field,
            },
            [residue.digest],
        )


@claim(
    "T-3.13",
    "For a regular ring, W√JU is equivalent to weakly Boolean, to π-regular reduced W√JU, to "
    "strongly regular W√JU and to unit-regular W√JU.",
)
class RegularChain(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        verdicts = context.record(entry.ring).verdicts

        def both(*names: str) -> Verdict:
            values = [verdicts[name] for name in names]
            return None if None in values else all(values)

        return self.agree(
            entry,
            {
                "regular and W√JU": both("regular", W),
                "π-regular, reduced and W√JU": both("pi_regular", "reduced", W),
                "weakly Boolean": verdicts.weakly_boolean,
                "strongly regular and W√JU": both("strongly_regular", W),
                "unit-regular and W√JU": both("unit_regular", W),
            },
        )


@claim(
    "T-3.16",
    "semi-regular W√JU ⇔ exchange W√JU ⇔ semi weakly Boolean ⇔ strongly weakly nil-clean, and an "
    "exchange ring is W√JU exactly when it is WUU.",
)
class ExchangeChain(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        verdicts = context.record(entry.ring).verdicts
        exchange = verdicts.exchange
        if exchange is None:
            return self.skipped(entry)
        w = verdicts[W]
        outcome = self.agree(
            entry,
            {
                "semi-regular and W√JU": verdicts.semi_regular and w,
                "exchange and W√JU": exchange and w,
                "semi weakly Boolean": verdicts.semi_weakly_boolean,
                "strongly weakly nil-clean": verdicts.strongly_weakly_nil_clean,
            },
        )
        if outcome.failed or not exchange:
            return outcome
        return self.agree(entry, {"W√JU": w, "WUU": verdicts.wuu})


@claim("T-m", "R is W√JU if and only if R/J(R) is WUU; so W√JU ⇔ WUU when J(R) is 0 or nil.")
class ResidueRing(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        profile = context.profile(ring)
        residue, _ = profile.radical_quotient
        w = context.holds(ring, W)
        related = [residue.digest]
        outcome = self.agree(entry, {"W√JU": w, "R/J WUU": context.holds(residue, "wuu")}, related)
        if outcome.failed:
            return outcome
        if (profile.jacobson & ~profile.nilpotents).any():
            return outcome
        return self.agree(entry, {"W√JU": w, "WUU (J nil)": context.holds(ring, "wuu")}, related)


@claim("T-clean", "A W√JU ring is semi-regular if and only if exchange, if and only if clean.")
class CleanExchange(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        verdicts = context.record(entry.ring).verdicts
        if not verdicts[W]:
            return self.not_applicable(entry)
        return self.agree(
            entry,
            {
                "semi-regular": verdicts.semi_regular,
                "exchange": verdicts.exchange,
                "clean": verdicts.clean,
            },
        )


@claim("P-pireduced", "R is regular and W√JU if and only if π-regular, reduced and W√JU.")
class PiRegularReduced(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        verdicts = context.record(entry.ring).verdicts
        if verdicts.pi_regular is None:
            return self.skipped(entry)
        w = verdicts[W]
        return self.agree(
            entry,
            {
                "regular and W√JU": verdicts.regular and w,
                "π-regular, reduced and W√JU": verdicts.pi_regular and verdicts.reduced and w,
            },
        )


@claim("P-cleanex", "Clean rings are exchange rings, and abelian exchange rings are clean.")
class CleanIsExchange(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        verdicts = context.record(entry.ring).verdicts
        if verdicts.exchange is None:
            return self.skipped(entry)
        if verdicts.clean and not verdicts.exchange:
            return self.failed(entry, (), "clean but not exchange")
        if verdicts.abelian and verdicts.exchange and not verdicts.clean:
            return self.failed(entry, (), "abelian exchange but not clean")
        return self.passed(entry)


@claim(
    "P-wuuex",
    "An exchange ring is WUU if and only if J(R) is nil and R/J(R) is weakly Boolean.",
)
class ExchangeWuu(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        ring = entry.ring
        exchange = context.verdict(ring, "exchange")
        if exchange is None:
            return self.skipped(entry)
        if not exchange:
            return self.not_applicable(entry)
        profile = context.profile(ring)
        residue, _ = profile.radical_quotient
        nil_radical = not (profile.jacobson & ~profile.nilpotents).any()
        return self.agree(
            entry,
            {
                "WUU": context.holds(ring, "wuu"),
                "J nil and R/J weakly Boolean": nil_radical
                and context.holds(residue, "weakly_boolean"),
            },
            [residue.digest],
        )


@claim("C-lattice", "Every implication between the ring classes holds on the ring's verdicts.")
class ImplicationLattice(Claim):
    def check(self, context: AuditContext, entry: CatalogEntry) -> ClaimOutcome:
        broken = lattice_violations(dict(context.record(entry.ring).verdicts))
        if broken:
            premise, conclusion = broken[0]
            return self.failed(entry, (), f"{premise} holds but {conclusion} does not")
        return self.passed(entry)
