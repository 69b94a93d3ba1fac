"""Ring class predicates, each evaluated as a literal scan of its definition.

No predicate is derived from another predicate through a theorem the audit is meant to check:
exchange searches aR and (1-a)R directly instead of following from clean, and so on.  The
implication lattice between the predicates is checked afterwards, as a consistency test of the
scans themselves.

The three predicates whose scans are the most expensive (exchange, pi_regular, unit_regular) are
skipped above limits.expensive_order; a skipped verdict is None in memory and "skipped(size)" on
the wire.
"""

import logging
from collections import OrderedDict
from typing import Dict, List, Optional, Tuple

import numpy as np

from finring.radicals import (
    RingProfile,
    idempotent_mask,
    sandwich_table,
)
from finring.rings import FiniteRing, power_orbit_hits
from finring.util import DEFAULT_LIMITS, FinringError, InternalInconsistency, Limits


logger = logging.getLogger(__name__)

CLASSIFICATION_VERSION = "1"
SKIPPED = "skipped(size)"

VERDICT_NAMES = (
    "uu",
    "wuu",
    "ju",
    "wju",
    "sqrt_ju",
    "w_sqrt_ju",
    "boolean",
    "weakly_boolean",
    "semi_weakly_boolean",
    "clean",
    "strongly_clean",
    "j_clean",
    "weakly_j_clean",
    "nil_clean",
    "strongly_nil_clean",
    "weakly_nil_clean",
    "strongly_weakly_nil_clean",
    "exchange",
    "regular",
    "strongly_regular",
    "unit_regular",
    "pi_regular",
    "semi_regular",
    "reduced",
    "abelian",
    "local",
    "dedekind_finite",
    "two_primal",
    "commutative",
)

EXPENSIVE_VERDICTS = ("exchange", "pi_regular", "unit_regular")

# Other names the same classes go by.
PREDICATE_ALIASES = {
    "weakly_semi_boolean": "weakly_j_clean",
    "semi_boolean": "j_clean",
}

IMPLICATIONS: Tuple[Tuple[str, str], ...] = (
    ("uu", "wuu"),
    ("wuu", "w_sqrt_ju"),
    ("ju", "wju"),
    ("wju", "w_sqrt_ju"),
    ("uu", "sqrt_ju"),
    ("ju", "sqrt_ju"),
    ("sqrt_ju", "w_sqrt_ju"),
    ("boolean", "weakly_boolean"),
    ("j_clean", "weakly_j_clean"),
    ("weakly_j_clean", "clean"),
    ("clean", "exchange"),
    ("strongly_regular", "unit_regular"),
    ("strongly_regular", "regular"),
    ("regular", "pi_regular"),
    ("regular", "semi_regular"),
    ("semi_regular", "exchange"),
    ("reduced", "abelian"),
    ("commutative", "two_primal"),
    ("reduced", "two_primal"),
    ("w_sqrt_ju", "dedekind_finite"),
)

Verdict = Optional[bool]


class UnknownPredicate(FinringError):
    def __init__(self, name: str):
        super().__init__(f"unknown predicate {name!r}")
        self.name = name


def canonical_predicate(name: str) -> str:
    """Resolves aliases and case; raises UnknownPredicate for names that are not predicates."""
    key = name.strip().lower().replace("-", "_")
    key = PREDICATE_ALIASES.get(key, key)
    if key not in VERDICT_NAMES:
        raise UnknownPredicate(name)
    return key


class Verdicts(OrderedDict):
    """One verdict per predicate name, in VERDICT_NAMES order, also readable as attributes:
    record.verdicts.w_sqrt_ju."""

    def __getattr__(self, name: str) -> Verdict:
        try:
            return self[name]
        except KeyError as ex:
            raise AttributeError(f"no predicate called {name}") from ex


class ClassificationRecord(object):
    def __init__(self, ring_hash: str, verdicts: Dict[str, Verdict], characteristic: int):
        self.ring_hash = ring_hash
        self.verdicts = Verdicts((name, verdicts[name]) for name in VERDICT_NAMES)
        self.characteristic = characteristic

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[canonical_predicate(name)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ClassificationRecord)
            and other.ring_hash == self.ring_hash
            and dict(other.verdicts) == dict(self.verdicts)
            and other.characteristic == self.characteristic
        )

    def __repr__(self) -> str:
        held = [name for name, verdict in self.verdicts.items() if verdict]
        return f"<ClassificationRecord {self.ring_hash[:12]} {held}>"

    def encode_json(self) -> dict:
        encoded: Dict[str, object] = {"hash": self.ring_hash}
        for name, verdict in self.verdicts.items():
            encoded[name] = SKIPPED if verdict is None else verdict
        encoded["characteristic"] = self.characteristic
        return encoded

    @staticmethod
    def decode_json(raw: dict) -> "ClassificationRecord":
        verdicts = {
            name: None if raw[name] == SKIPPED else bool(raw[name]) for name in VERDICT_NAMES
        }
        return ClassificationRecord(raw["hash"], verdicts, int(raw["characteristic"]))


def _shifted(ring: FiniteRing, mask: np.ndarray, shift: int) -> np.ndarray:
    """Mask of shift + s for s in mask."""
    image = np.zeros(ring.order, dtype=bool)
    image[ring.add[shift, np.flatnonzero(mask)]] = True
    return image


def _sums(ring: FiniteRing, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Mask of every l + r."""
    image = np.zeros(ring.order, dtype=bool)
    image[ring.add[np.ix_(np.flatnonzero(left), np.flatnonzero(right))]] = True
    return image


def _commuting_sums(ring: FiniteRing, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Mask of every l + r with l·r = r·l."""
    rows, columns = np.flatnonzero(left), np.flatnonzero(right)
    commute = ring.mul[np.ix_(rows, columns)] == ring.mul[np.ix_(columns, rows)].T
    image = np.zeros(ring.order, dtype=bool)
    image[ring.add[np.ix_(rows, columns)][commute]] = True
    return image


def _negated(ring: FiniteRing, mask: np.ndarray) -> np.ndarray:
    return mask[ring.neg]


def unit_class_predicates(profile: RingProfile) -> Dict[str, bool]:
    """uu, wuu, ju, wju, sqrt_ju, w_sqrt_ju as set equalities between U(R) and ±1 + S.

    Raises:
        InternalInconsistency: some ±1 + S is not inside U(R), which cannot happen for
            S ∈ {Nil(R), J(R), √J(R)}.
    """
    ring = profile.ring
    is_unit = profile.units
    verdicts = {}
    for strong, weak, subset in (
        ("uu", "wuu", profile.nilpotents),
        ("ju", "wju", profile.jacobson),
        ("sqrt_ju", "w_sqrt_ju", profile.sqrt_jacobson),
    ):
        plus = _shifted(ring, subset, ring.one)
        minus = _shifted(ring, subset, ring.minus_one)
        if (plus & ~is_unit).any() or (minus & ~is_unit).any():
            logger.error("±1 + %s escapes U(R) in %s", strong, ring.label)
            raise InternalInconsistency(
                f"±1 + S is not inside U(R) for {strong} on {ring.label}; this should never happen, file a bug."
            )
        verdicts[strong] = bool((plus == is_unit).all())
        verdicts[weak] = bool(((plus | minus) == is_unit).all())
    return verdicts


def is_weakly_boolean(ring: FiniteRing, idempotents: Optional[np.ndarray] = None) -> bool:
    idempotents = idempotent_mask(ring) if idempotents is None else idempotents
    return bool((idempotents | _negated(ring, idempotents)).all())


def boolean_predicates(profile: RingProfile) -> Dict[str, bool]:
    image, _ = profile.radical_quotient
    return {
        "boolean": bool(profile.idempotents.all()),
        "weakly_boolean": is_weakly_boolean(profile.ring, profile.idempotents),
        "semi_weakly_boolean": is_weakly_boolean(image)
        and profile.idempotents_lift_mod_jacobson,
    }


def is_exchange(ring: FiniteRing, idempotents: np.ndarray) -> bool:
    """For each a some idempotent e ∈ aR with 1 - e ∈ (1 - a)R."""
    n = ring.order
    right_multiples = np.zeros((n, n), dtype=bool)  # [a, x]: x ∈ aR
    right_multiples[np.arange(n)[:, None], ring.mul] = True
    candidates = np.flatnonzero(idempotents)
    complements = ring.add[ring.one, ring.neg[candidates]]
    one_minus_a = ring.add[ring.one, ring.neg]
    found = right_multiples[:, candidates] & right_multiples[one_minus_a][:, complements]
    return bool(found.any(axis=1).all())


def clean_predicates(profile: RingProfile, limits: Limits = DEFAULT_LIMITS) -> Dict[str, Verdict]:
    ring = profile.ring
    units, idempotents = profile.units, profile.idempotents
    jacobson, nilpotents = profile.jacobson, profile.nilpotents
    minus_idempotents = _negated(ring, idempotents)

    def covers(mask: np.ndarray) -> bool:
        return bool(mask.all())

    verdicts: Dict[str, Verdict] = {
        "clean": covers(_sums(ring, units, idempotents)),
        "strongly_clean": covers(_commuting_sums(ring, units, idempotents)),
        "j_clean": covers(_sums(ring, jacobson, idempotents)),
        "weakly_j_clean": covers(
            _sums(ring, jacobson, idempotents) | _sums(ring, jacobson, minus_idempotents)
        ),
        "nil_clean": covers(_sums(ring, nilpotents, idempotents)),
        "strongly_nil_clean": covers(_commuting_sums(ring, nilpotents, idempotents)),
        "weakly_nil_clean": covers(
            _sums(ring, nilpotents, idempotents) | _sums(ring, nilpotents, minus_idempotents)
        ),
        # n and -e commute exactly when n and e do
        "strongly_weakly_nil_clean": covers(
            _commuting_sums(ring, nilpotents, idempotents)
            | _commuting_sums(ring, nilpotents, minus_idempotents)
        ),
    }
    verdicts["exchange"] = (
        is_exchange(ring, idempotents) if limits.allows_expensive(ring.order) else None
    )
    return verdicts


def regular_mask(ring: FiniteRing, sandwiches: Optional[np.ndarray] = None) -> np.ndarray:
    """Elements a with a·x·a = a for some x."""
    sandwiches = sandwich_table(ring) if sandwiches is None else sandwiches
    return (sandwiches == np.arange(ring.order)[:, None]).any(axis=1)


def regularity_predicates(
    profile: RingProfile, limits: Limits = DEFAULT_LIMITS
) -> Dict[str, Verdict]:
    ring = profile.ring
    everything = np.arange(ring.order)
    sandwiches = sandwich_table(ring)
    regular = regular_mask(ring, sandwiches)
    squares = ring.mul[everything, everything]
    image, _ = profile.radical_quotient

    verdicts: Dict[str, Verdict] = {
        "regular": bool(regular.all()),
        "strongly_regular": bool((ring.mul[squares] == everything[:, None]).any(axis=1).all()),
        "semi_regular": bool(regular_mask(image).all()) and profile.idempotents_lift_mod_jacobson,
    }
    if limits.allows_expensive(ring.order):
        units = np.flatnonzero(profile.units)
        verdicts["unit_regular"] = bool(
            (sandwiches[:, units] == everything[:, None]).any(axis=1).all()
        )
        # a^k ∈ a^k R a^k exactly when a^k is regular
        verdicts["pi_regular"] = bool(power_orbit_hits(ring, regular, ring.order).all())
    else:
        verdicts["unit_regular"] = None
        verdicts["pi_regular"] = None
    return verdicts


def structural_predicates(profile: RingProfile) -> Dict[str, bool]:
    ring = profile.ring
    right_inverse = ring.mul == ring.one
    non_units = np.flatnonzero(~profile.units)
    local = ring.order > 1 and bool((~profile.units[ring.add[np.ix_(non_units, non_units)]]).all())
    return {
        "reduced": int(profile.nilpotents.sum()) == 1,
        "abelian": bool((profile.center | ~profile.idempotents).all()),
        "local": local,
        "dedekind_finite": not bool((right_inverse & ~right_inverse.T).any()),
        "two_primal": bool((profile.prime_radical == profile.nilpotents).all()),
        "commutative": profile.commutative,
    }


def lattice_violations(verdicts: Dict[str, Verdict]) -> List[Tuple[str, str]]:
    """Every implication whose premise holds and whose conclusion fails; skipped verdicts
    never count as either."""
    return [
        (premise, conclusion)
        for premise, conclusion in IMPLICATIONS
        if verdicts.get(premise) is True and verdicts.get(conclusion) is False
    ]


def classify(
    profile: RingProfile, limits: Limits = DEFAULT_LIMITS, strict: bool = True
) -> ClassificationRecord:
    """Evaluates every predicate on one ring.

    Arguments:
        profile {RingProfile} -- The ring with its derived sets.

    Keyword Arguments:
        limits {Limits} -- Decides which expensive predicates are skipped (default: {DEFAULT_LIMITS})
        strict {bool} -- Raise when the implication lattice breaks (default: {True})

    Raises:
        InternalInconsistency: strict is set and some implication fails.

    Returns:
        ClassificationRecord -- One verdict per name in VERDICT_NAMES, plus the characteristic.
    """
    logger.debug("classifying %s", profile.ring.label)
    verdicts: Dict[str, Verdict] = {}
    verdicts.update(unit_class_predicates(profile))
    verdicts.update(boolean_predicates(profile))
    verdicts.update(clean_predicates(profile, limits))
    verdicts.update(regularity_predicates(profile, limits))
    verdicts.update(structural_predicates(profile))

    broken = lattice_violations(verdicts)
    if broken and strict:
        logger.error("implication lattice broken on %s: %s", profile.ring.label, broken)
        raise InternalInconsistency(
            f"{profile.ring.label} breaks {broken}; this should never happen, file a bug."
        )
    return ClassificationRecord(profile.ring.digest, verdicts, profile.characteristic)
