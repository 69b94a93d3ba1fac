"""Ideals, quotients, corners and subrings.

Quotient R/I represents each coset by its least element index; coset c of R/I is the c-th
smallest representative.  Corner eRe and generated subrings keep the relative order of their
members in R, so their element i is the i-th smallest member.
"""

import logging
from collections import deque
from typing import Deque, Iterable, List, Tuple, Union

import numpy as np

from finring.constructions.homs import Ideal, NotAnIdeal, RingHom, as_mask
from finring.rings import ElemSet, FiniteRing, Provenance, RingElement, validate_ring
from finring.util import DEFAULT_LIMITS, FinringError, Limits


logger = logging.getLogger(__name__)


class NotIdempotent(FinringError):
    pass


class ZeroCorner(FinringError):
    pass


class QuotientProvenance(Provenance):
    kind = "quotient"

    def __init__(self, source: FiniteRing, ideal: Ideal, projection: RingHom):
        self.source = source
        self.ideal = ideal
        self.projection = projection

    def surjections(self, ring: FiniteRing) -> List[Tuple[str, RingHom]]:
        return [(f"projection of {self.source.label}", self.projection)]


class CornerProvenance(Provenance):
    kind = "corner"

    def __init__(self, source: FiniteRing, idempotent: int):
        self.source = source
        self.idempotent = idempotent


class SubringProvenance(Provenance):
    kind = "subring"

    def __init__(self, source: FiniteRing, members: np.ndarray):
        self.source = source
        self.members = members


def _two_sided_products(ring: FiniteRing, seeds: np.ndarray) -> np.ndarray:
    """Mask of all products r·g·s with g a seed: worklist closure under multiplication by
    every ring element on either side."""
    members = np.zeros(ring.order, dtype=bool)
    queue: Deque[int] = deque()
    for g in np.flatnonzero(seeds):
        members[g] = True
        queue.append(int(g))
    while queue:
        x = queue.popleft()
        for products in (ring.mul[x, :], ring.mul[:, x]):
            fresh = np.unique(products[~members[products]])
            members[fresh] = True
            queue.extend(fresh.tolist())
    return members


def join_cyclic(ring: FiniteRing, subgroup: np.ndarray, p: int) -> np.ndarray:
    """The additive subgroup generated by subgroup ∪ {p}, added one coset of the subgroup at a time."""
    joined = subgroup.copy()
    members = np.flatnonzero(subgroup)
    current = p
    while not joined[current]:
        joined[ring.add[members, current]] = True
        current = int(ring.add[current, p])
    return joined


def additive_span(ring: FiniteRing, seeds: np.ndarray) -> np.ndarray:
    span = np.zeros(ring.order, dtype=bool)
    span[ring.zero] = True
    for p in np.flatnonzero(seeds):
        if not span[p]:
            span = join_cyclic(ring, span, int(p))
    return span


def ideal_generated(
    ring: FiniteRing, gens: Union[ElemSet, np.ndarray, Iterable[int]]
) -> Ideal:
    """The least two-sided ideal containing gens.

    Arguments:
        ring {FiniteRing} -- The ambient ring.
        gens {ElemSet or indices or mask} -- Generators; an empty set generates {0}.

    Returns:
        Ideal -- the additive span of every product r·g·s.
    """
    seeds = as_mask(ring, gens)
    span = additive_span(ring, _two_sided_products(ring, seeds))
    return Ideal(ring.digest, ElemSet.from_mask(ring, span))


def restrict(
    ring: FiniteRing,
    members: np.ndarray,
    one: int,
    label: str,
    limits: Limits,
    provenance: Provenance,
) -> FiniteRing:
    """The ring on a subset closed under both operations, with its own identity `one`.
    The subset's tables are re-validated as a ring in their own right."""
    members = np.asarray(members, dtype=np.int64)
    position = np.full(ring.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    block = np.ix_(members, members)
    return validate_ring(
        len(members),
        position[ring.add[block]],
        position[ring.mul[block]],
        int(position[ring.zero]),
        int(position[one]),
        label,
        limits,
        provenance,
    )


def quotient(
    ring: FiniteRing,
    ideal: Union[Ideal, ElemSet, Iterable[int]],
    limits: Limits = DEFAULT_LIMITS,
) -> Tuple[FiniteRing, RingHom]:
    """R/I with cosets represented by least members, and the canonical projection.

    Raises:
        NotAnIdeal: the given subset is not an ideal of this ring.
    """
    if isinstance(ideal, Ideal):
        if ideal.ring_hash != ring.digest:
            raise NotAnIdeal(f"{ideal!r} is an ideal of a different ring")
    else:
        ideal = Ideal.of(ring, ideal)

    representative = ring.add[:, ideal.indices()].min(axis=1)
    cosets = np.unique(representative)
    position = np.full(ring.order, -1, dtype=np.int64)
    position[cosets] = np.arange(len(cosets))
    projection_table = position[representative]
    block = np.ix_(cosets, cosets)
    gens = ",".join(str(m) for m in ideal.members)
    label = f"Quot({ring.label},[{gens}])"
    image = validate_ring(
        len(cosets),
        projection_table[ring.add[block]],
        projection_table[ring.mul[block]],
        int(projection_table[ring.zero]),
        int(projection_table[ring.one]),
        label,
        limits,
    )
    projection = RingHom(ring, image, projection_table).check()
    image = image.relabel(label, QuotientProvenance(ring, ideal, projection))
    return image, projection


def corner(
    ring: FiniteRing, e: Union[int, RingElement], limits: Limits = DEFAULT_LIMITS
) -> FiniteRing:
    """The corner ring eRe with identity e.

    Raises:
        NotIdempotent: e·e ≠ e.
        ZeroCorner: e = 0.
    """
    index = e.index if isinstance(e, RingElement) else int(e)
    if not 0 <= index < ring.order or ring.mul[index, index] != index:
        raise NotIdempotent(f"{index} is not an idempotent of {ring.label}")
    if index == ring.zero:
        raise ZeroCorner(f"the corner at 0 of {ring.label} is not a unital ring")
    members = np.unique(ring.mul[ring.mul[index], index])
    return restrict(
        ring,
        members,
        index,
        f"Corner({ring.label},{index})",
        limits,
        CornerProvenance(ring, index),
    )


def subring_closure(ring: FiniteRing, seeds: np.ndarray) -> np.ndarray:
    """Mask of the unital subring generated by the seeds."""
    members = seeds.copy()
    members[ring.zero] = True
    members[ring.one] = True
    size = int(members.sum())
    while True:
        inside = np.flatnonzero(members)
        block = np.ix_(inside, inside)
        members[ring.add[block]] = True
        members[ring.mul[block]] = True
        grown = int(members.sum())
        if grown == size:
            return members
        size = grown


def subring_generated(
    ring: FiniteRing, gens: Iterable[int], limits: Limits = DEFAULT_LIMITS
) -> FiniteRing:
    """The unital subring generated by gens, as a ring in its own right."""
    indices = [int(g) for g in gens]
    members = np.flatnonzero(subring_closure(ring, as_mask(ring, indices)))
    return restrict(
        ring,
        members,
        ring.one,
        f"Sub({ring.label},{indices})",
        limits,
        SubringProvenance(ring, members),
    )
