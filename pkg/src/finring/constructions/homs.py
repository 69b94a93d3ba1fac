import logging
from typing import Iterable, Optional, Union

import numpy as np

from finring.rings import ElemSet, FiniteRing
from finring.util import FinringError, InternalInconsistency, frozen


logger = logging.getLogger(__name__)


class NotAnIdeal(FinringError):
    pass


def ideal_violation(ring: FiniteRing, mask: np.ndarray) -> Optional[str]:
    """Describes the first ideal axiom the subset fails, or None for an ideal."""
    if not mask[ring.zero]:
        return "does not contain zero"
    members = np.flatnonzero(mask)
    if not mask[ring.add[np.ix_(members, members)]].all():
        return "is not closed under addition"
    if not mask[ring.neg[members]].all():
        return "is not closed under negation"
    if not mask[ring.mul[:, members]].all():
        return "does not absorb multiplication on the left"
    if not mask[ring.mul[members, :]].all():
        return "does not absorb multiplication on the right"
    return None


class Ideal(object):
    """A two-sided ideal of one ring.  Build with Ideal.of, which checks the ideal axioms, or
    through ideal_generated."""

    def __init__(self, ring_hash: str, members: ElemSet):
        self.ring_hash = ring_hash
        self.members = members

    @staticmethod
    def of(ring: FiniteRing, members: Union[np.ndarray, ElemSet, Iterable[int]]) -> "Ideal":
        mask = as_mask(ring, members)
        problem = ideal_violation(ring, mask)
        if problem:
            raise NotAnIdeal(f"the subset {problem} of {ring.label or ring.digest[:12]}")
        return Ideal(ring.digest, ElemSet.from_mask(ring, mask))

    def mask(self, order: int) -> np.ndarray:
        return self.members.mask(order)

    def indices(self) -> np.ndarray:
        return self.members.indices()

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ideal) and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"<Ideal {list(self.members.members)}>"

    def encode_json(self) -> list:
        return self.members.encode_json()


def as_mask(ring: FiniteRing, members: Union[np.ndarray, ElemSet, Ideal, Iterable[int]]) -> np.ndarray:
    if isinstance(members, Ideal):
        return members.mask(ring.order)
    if isinstance(members, ElemSet):
        return members.mask(ring.order)
    if isinstance(members, np.ndarray) and members.dtype == bool:
        return members
    mask = np.zeros(ring.order, dtype=bool)
    indices = [int(m) for m in members]
    if any(not 0 <= m < ring.order for m in indices):
        raise NotAnIdeal(f"{indices} contains indices outside of the ring")
    mask[indices] = True
    return mask


class RingHom(object):
    """A ring homomorphism source → target given by its table of images."""

    def __init__(self, source: FiniteRing, target: FiniteRing, table: np.ndarray):
        self.source = source
        self.target = target
        self.map = frozen(np.asarray(table, dtype=np.int64))

    @property
    def source_hash(self) -> str:
        return self.source.digest

    @property
    def target_hash(self) -> str:
        return self.target.digest

    def check(self) -> "RingHom":
        """Verifies the homomorphism laws.

        Raises:
            InternalInconsistency: the table is not a unital ring homomorphism.
        """
        f, s, t = self.map, self.source, self.target
        laws = {
            "zero": f[s.zero] == t.zero,
            "one": f[s.one] == t.one,
            "addition": (f[s.add] == t.add[f[:, None], f[None, :]]).all(),
            "multiplication": (f[s.mul] == t.mul[f[:, None], f[None, :]]).all(),
        }
        broken = [name for name, holds in laws.items() if not holds]
        if broken:
            logger.error("map %s -> %s breaks %s", s.label, t.label, broken)
            raise InternalInconsistency(
                f"map {s.label} -> {t.label} does not preserve {', '.join(broken)}; this should never happen, file a bug."
            )
        return self

    def image(self, mask: np.ndarray) -> np.ndarray:
        result = np.zeros(self.target.order, dtype=bool)
        result[self.map[mask]] = True
        return result

    def is_surjective(self) -> bool:
        return bool(self.image(np.ones(self.source.order, dtype=bool)).all())

    def kernel(self) -> Ideal:
        return Ideal(
            self.source.digest,
            ElemSet.from_mask(self.source, self.map == self.target.zero),
        )

    def __repr__(self) -> str:
        return f"<RingHom {self.source.label} -> {self.target.label}>"
