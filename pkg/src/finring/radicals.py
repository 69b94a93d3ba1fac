"""Units, idempotents, nilpotents, centre, the Jacobson radical J(R), its root √J(R) and the
prime radical, all computed by exhaustive scans over the operation tables.

Exponent bounds: the power sequence x, x², x³, ... of an element of a ring of order n takes at
most n distinct values, and every value it ever takes appears among the first n powers.  So
"x^k ∈ S for some k ≥ 1" is decided by scanning k = 1..n, which is what sqrt_jacobson and the
nilpotent scan do.

J(R) is computed from the quasi-regularity definition, x ∈ J iff 1 - r·x and 1 - x·r are units for
every r.  The maximal-ideal description is only used as an oracle for commutative rings, because
enumerating ideals is exponential.

RingProfile bundles all of these for one ring and computes each lazily once; ProfileStore hands out
one profile per ring digest.  Neither writes anything back into the ring.
"""

import logging
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from finring.constructions import (
    Ideal,
    RingHom,
    ideal_generated,
    ideal_violation,
    quotient,
)
from finring.rings import (
    ElemSet,
    FiniteRing,
    characteristic,
    is_commutative,
    power_orbit_hits,
)
from finring.util import DEFAULT_LIMITS, InternalInconsistency, Limits


logger = logging.getLogger(__name__)


def _inconsistent(message: str) -> InternalInconsistency:
    logger.error(message)
    return InternalInconsistency(f"{message}; this should never happen, file a bug.")


class UnitGroup(object):
    def __init__(
        self,
        ring: FiniteRing,
        members: np.ndarray,
        inverse: np.ndarray,
        left_invertible: np.ndarray,
        right_invertible: np.ndarray,
    ):
        self.ring_hash = ring.digest
        self.members = ElemSet.from_mask(ring, members)
        self.inverse_table = inverse
        self.left_invertible = ElemSet.from_mask(ring, left_invertible)
        self.right_invertible = ElemSet.from_mask(ring, right_invertible)
        self.mask = self.members.mask(ring.order)

    def inverse(self, u: int) -> int:
        if not self.mask[u]:
            raise ValueError(f"{u} is not a unit")
        return int(self.inverse_table[u])

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members


def units(ring: FiniteRing) -> UnitGroup:
    """Every element with a two-sided inverse, found by pairing all elements.

    The left- and right-invertible sets are computed separately; in a finite ring they must both
    equal the unit group, and a mismatch raises InternalInconsistency.
    """
    right_inverse = ring.mul == ring.one  # [a, b]: ab = 1
    two_sided = right_inverse & right_inverse.T
    has_right_inverse = right_inverse.any(axis=1)
    has_left_inverse = right_inverse.any(axis=0)
    unit_mask = two_sided.any(axis=1)
    if (has_right_inverse != unit_mask).any() or (has_left_inverse != unit_mask).any():
        raise _inconsistent(f"one-sided inverses differ from units in {ring.label}")
    inverse = np.where(unit_mask, two_sided.argmax(axis=1), -1)
    return UnitGroup(ring, unit_mask, inverse, has_left_inverse, has_right_inverse)


def idempotent_mask(ring: FiniteRing) -> np.ndarray:
    everything = np.arange(ring.order)
    return ring.mul[everything, everything] == everything


def nilpotent_mask(ring: FiniteRing) -> np.ndarray:
    return power_orbit_hits(ring, np.arange(ring.order) == ring.zero, ring.order)


def center_mask(ring: FiniteRing) -> np.ndarray:
    return (ring.mul == ring.mul.T).all(axis=1)


def element_sets(ring: FiniteRing) -> Tuple[ElemSet, ElemSet, ElemSet]:
    """Id(R), Nil(R) and C(R)."""
    return (
        ElemSet.from_mask(ring, idempotent_mask(ring)),
        ElemSet.from_mask(ring, nilpotent_mask(ring)),
        ElemSet.from_mask(ring, center_mask(ring)),
    )


def jacobson_radical(ring: FiniteRing, unit_group: Optional[UnitGroup] = None) -> Ideal:
    """J(R) = {x : 1 - r·x and 1 - x·r are units for every r}.

    Raises:
        InternalInconsistency: the scan produced a set that is not an ideal, meets the units,
            or fails ±1 + J ⊆ U.
    """
    unit_group = unit_group or units(ring)
    is_unit = unit_group.mask
    one_minus = ring.add[ring.one][ring.neg[ring.mul]]  # [r, x]: 1 - r·x
    left = is_unit[one_minus].all(axis=0)
    right = is_unit[one_minus.T].all(axis=0)  # [r, x]: 1 - x·r
    if (left != right).any():
        raise _inconsistent(f"left and right quasi-regular sets differ in {ring.label}")

    problem = ideal_violation(ring, left)
    if problem:
        raise _inconsistent(f"the computed J(R) of {ring.label} {problem}")
    radical = np.flatnonzero(left)
    if ring.order > 1 and is_unit[radical].any():
        raise _inconsistent(f"J(R) of {ring.label} contains a unit")
    if not is_unit[ring.add[ring.one, radical]].all() or not is_unit[ring.add[ring.minus_one, radical]].all():
        raise _inconsistent(f"±1 + J(R) is not inside U(R) for {ring.label}")
    return Ideal(ring.digest, ElemSet.from_mask(ring, left))


def sqrt_jacobson(
    ring: FiniteRing,
    jacobson: Optional[Ideal] = None,
    max_exponent: Optional[int] = None,
) -> ElemSet:
    """√J(R) = {x : x^k ∈ J(R) for some 1 ≤ k ≤ max_exponent}, max_exponent defaulting to |R|."""
    jacobson = jacobson or jacobson_radical(ring)
    hits = power_orbit_hits(ring, jacobson.mask(ring.order), max_exponent or ring.order)
    return ElemSet.from_mask(ring, hits)


def sandwich_table(ring: FiniteRing) -> np.ndarray:
    """[a, r] → a·r·a."""
    return ring.mul[ring.mul, np.arange(ring.order)[:, None]]


def prime_radical(ring: FiniteRing, nilpotents: Optional[np.ndarray] = None) -> Ideal:
    """The smallest semiprime ideal, reached from {0} by repeatedly adding every a with
    aRa inside the current ideal and closing up.

    Raises:
        InternalInconsistency: the fixpoint contains a non-nilpotent element.
    """
    sandwiches = sandwich_table(ring)
    current = np.zeros(ring.order, dtype=bool)
    current[ring.zero] = True
    while True:
        absorbed = current[sandwiches].all(axis=1)
        grown = ideal_generated(ring, current | absorbed).mask(ring.order)
        if (grown == current).all():
            break
        current = grown.copy()

    nilpotents = nilpotent_mask(ring) if nilpotents is None else nilpotents
    if (current & ~nilpotents).any():
        raise _inconsistent(f"prime radical of {ring.label} is not nil")
    return Ideal(ring.digest, ElemSet.from_mask(ring, current))


def idempotents_lift(
    ring: FiniteRing,
    ideal: Ideal,
    limits: Limits = DEFAULT_LIMITS,
    idempotents: Optional[np.ndarray] = None,
) -> bool:
    """True iff every idempotent coset of R/I contains an idempotent of R.

    Raises:
        NotAnIdeal: ideal is not an ideal of ring.
    """
    image, projection = quotient(ring, ideal, limits)
    idempotents = idempotent_mask(ring) if idempotents is None else idempotents
    lifted = projection.image(idempotents)
    return bool(lifted[idempotent_mask(image)].all())


def ideal_lattice(ring: FiniteRing) -> List[np.ndarray]:
    """Every two-sided ideal, found by joining principal ideals until nothing new appears.
    Exponential in general; only used on small rings."""
    principals: Dict[bytes, np.ndarray] = {}
    for x in range(ring.order):
        mask = ideal_generated(ring, [x]).mask(ring.order)
        principals.setdefault(mask.tobytes(), mask)

    found = dict(principals)
    frontier = list(principals.values())
    while frontier:
        discovered = []
        for ideal in frontier:
            for principal in principals.values():
                if (principal <= ideal).all():
                    continue
                joined = ideal_generated(ring, ideal | principal).mask(ring.order)
                key = joined.tobytes()
                if key not in found:
                    found[key] = joined
                    discovered.append(joined)
        frontier = discovered
    return sorted(found.values(), key=lambda m: (int(m.sum()), m.tobytes()))


def maximal_ideals(ring: FiniteRing) -> List[Ideal]:
    proper = [m for m in ideal_lattice(ring) if not m[ring.one]]
    maximal = [
        m
        for m in proper
        if not any((m <= other).all() and other.sum() > m.sum() for other in proper)
    ]
    return [Ideal(ring.digest, ElemSet.from_mask(ring, m)) for m in maximal]


def jacobson_by_maximal_ideals(ring: FiniteRing) -> Ideal:
    """Intersection of all maximal ideals; the whole ring when there are none."""
    result = np.ones(ring.order, dtype=bool)
    for ideal in maximal_ideals(ring):
        result &= ideal.mask(ring.order)
    return Ideal(ring.digest, ElemSet.from_mask(ring, result))


class RingProfile(object):
    """Lazily computed derived data for one ring."""

    def __init__(self, ring: FiniteRing, limits: Limits = DEFAULT_LIMITS):
        self.ring = ring
        self.limits = limits

    @cached_property
    def unit_group(self) -> UnitGroup:
        return units(self.ring)

    @property
    def units(self) -> np.ndarray:
        return self.unit_group.mask

    @cached_property
    def idempotents(self) -> np.ndarray:
        return idempotent_mask(self.ring)

    @cached_property
    def nilpotents(self) -> np.ndarray:
        return nilpotent_mask(self.ring)

    @cached_property
    def center(self) -> np.ndarray:
        return center_mask(self.ring)

    @cached_property
    def jacobson_ideal(self) -> Ideal:
        return jacobson_radical(self.ring, self.unit_group)

    @property
    def jacobson(self) -> np.ndarray:
        return self.jacobson_ideal.mask(self.ring.order)

    @cached_property
    def sqrt_jacobson(self) -> np.ndarray:
        return sqrt_jacobson(self.ring, self.jacobson_ideal).mask(self.ring.order)

    @cached_property
    def prime_radical(self) -> np.ndarray:
        return prime_radical(self.ring, self.nilpotents).mask(self.ring.order)

    @cached_property
    def radical_quotient(self) -> Tuple[FiniteRing, RingHom]:
        return quotient(self.ring, self.jacobson_ideal, self.limits)

    @cached_property
    def idempotents_lift_mod_jacobson(self) -> bool:
        image, projection = self.radical_quotient
        lifted = projection.image(self.idempotents)
        return bool(lifted[idempotent_mask(image)].all())

    @cached_property
    def characteristic(self) -> int:
        return characteristic(self.ring)

    @cached_property
    def commutative(self) -> bool:
        return is_commutative(self.ring)

    def contains(self, name: str, element: int) -> bool:
        return bool(getattr(self, name)[element])


class ProfileStore(object):
    """One RingProfile per ring digest.  Filling the same digest twice yields identical data, so
    concurrent fills are harmless; setdefault keeps the first one."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits
        self.__profiles: Dict[str, RingProfile] = {}

    def profile(self, ring: FiniteRing) -> RingProfile:
        existing = self.__profiles.get(ring.digest)
        if existing is not None:
            return existing
        return self.__profiles.setdefault(ring.digest, RingProfile(ring, self.limits))

    def __len__(self) -> int:
        return len(self.__profiles)
