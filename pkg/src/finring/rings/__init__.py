"""Finite unital rings given by operation tables.

A ring of order n lives on the element indices 0..n-1.  Its addition and multiplication are
n×n numpy tables of indices, so every algorithm downstream is a vectorised scan over those tables.
Rings are only ever produced by validate_ring, are immutable afterwards, and are identified by a
digest of (order, zero, one, add, mul).  The digest identifies presented rings: two isomorphic
rings with different encodings have different digests.

Everything derived from a ring (units, radicals, classification) is computed elsewhere and cached
by digest; nothing here mutates after construction.
"""

import hashlib
import logging
from enum import Enum
from typing import Any, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from finring.util import (
    DEFAULT_LIMITS,
    FinringError,
    Limits,
    check_size,
    frozen,
    table_dtype,
)


logger = logging.getLogger(__name__)


class AxiomKind(Enum):
    TABLE_SHAPE = "table-shape"
    ADD_COMMUTATIVE = "add-commutative"
    ADD_ASSOCIATIVE = "add-associative"
    ADD_IDENTITY = "add-identity"
    ADD_INVERSE = "add-inverse"
    MUL_IDENTITY = "identity"
    MUL_ASSOCIATIVE = "mul-associative"
    LEFT_DISTRIBUTIVE = "left-distributive"
    RIGHT_DISTRIBUTIVE = "right-distributive"


class AxiomViolation(FinringError):
    def __init__(self, kind: AxiomKind, witness: Tuple[int, ...]):
        super().__init__(f"{kind.value} axiom fails at {witness}")
        self.kind = kind
        self.witness = witness


class ForeignElement(FinringError):
    pass


class ElementOp(Enum):
    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    SUB = "sub"


class Provenance(object):
    """Construction metadata a constructor attaches to the rings it builds.  Subclasses live
    next to their constructors; the base class marks rings with no recorded construction."""

    kind = "tables"

    def surjections(self, ring: "FiniteRing") -> List[Tuple[str, Any]]:
        """Named surjective homomorphisms out of the constructed ring."""
        return []


class FiniteRing(object):
    """A validated finite unital ring.  Do not construct directly, use validate_ring."""

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        zero: int,
        one: int,
        neg: np.ndarray,
        digest: str,
        label: str = "",
        provenance: Optional[Provenance] = None,
    ):
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.neg = neg
        self.digest = digest
        self.label = label
        self.provenance = provenance if provenance is not None else Provenance()

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def minus_one(self) -> int:
        return int(self.neg[self.one])

    def relabel(
        self, label: str, provenance: Optional[Provenance] = None
    ) -> "FiniteRing":
        """Same tables and digest under a new label (and optionally new provenance)."""
        return FiniteRing(
            self.add,
            self.mul,
            self.zero,
            self.one,
            self.neg,
            self.digest,
            label,
            provenance if provenance is not None else self.provenance,
        )

    def multiple_of_one(self, k: int) -> int:
        """The element k·1 (k ≥ 0)."""
        value = self.zero
        for _ in range(k):
            value = int(self.add[value, self.one])
        return value

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def element(self, index: int) -> "RingElement":
        if not 0 <= index < self.order:
            raise ForeignElement(
                f"{index} is not an element of {self.label or self.digest[:12]}"
            )
        return RingElement(int(index), self.digest)

    def elements(self) -> Iterator["RingElement"]:
        for index in range(self.order):
            yield RingElement(index, self.digest)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteRing) and other.digest == self.digest

    def __hash__(self) -> int:
        return hash(self.digest)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label or '?'} order={self.order} hash={self.digest[:12]}>"

    def encode_json(self) -> dict:
        return {
            "order": self.order,
            "zero": self.zero,
            "one": self.one,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
            "label": self.label,
        }


class RingElement(object):
    __slots__ = ("index", "ring_hash")

    def __init__(self, index: int, ring_hash: str):
        self.index = index
        self.ring_hash = ring_hash

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and other.index == self.index
            and other.ring_hash == self.ring_hash
        )

    def __hash__(self) -> int:
        return hash((self.index, self.ring_hash))

    def __repr__(self) -> str:
        return f"<RingElement {self.index} of {self.ring_hash[:12]}>"


class ElemSet(object):
    """A sorted, duplicate free set of element indices of one ring."""

    def __init__(self, ring_hash: str, members: Iterable[int]):
        self.ring_hash = ring_hash
        self.members: Tuple[int, ...] = tuple(sorted({int(m) for m in members}))
        self.__mask: Optional[np.ndarray] = None

    @staticmethod
    def from_mask(ring: FiniteRing, mask: np.ndarray) -> "ElemSet":
        elem_set = ElemSet(ring.digest, np.flatnonzero(mask).tolist())
        elem_set.__mask = frozen(np.array(mask, dtype=bool))
        return elem_set

    def mask(self, order: int) -> np.ndarray:
        if self.__mask is None or self.__mask.shape[0] != order:
            mask = np.zeros(order, dtype=bool)
            mask[list(self.members)] = True
            self.__mask = frozen(mask)
        return self.__mask

    def indices(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, RingElement):
            return item.ring_hash == self.ring_hash and item.index in self.members
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElemSet)
            and other.ring_hash == self.ring_hash
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((self.ring_hash, self.members))

    def __repr__(self) -> str:
        return f"<ElemSet {list(self.members)}>"

    def encode_json(self) -> list:
        return list(self.members)


def table_digest(order: int, add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> str:
    digest = hashlib.sha256()
    digest.update(f"{order}:{zero}:{one}:".encode("ascii"))
    digest.update(np.ascontiguousarray(add, dtype="<i4").tobytes())
    digest.update(np.ascontiguousarray(mul, dtype="<i4").tobytes())
    return digest.hexdigest()


def validate_ring(
    order: int,
    add_table: Union[np.ndarray, List[List[int]]],
    mul_table: Union[np.ndarray, List[List[int]]],
    zero: int,
    one: int,
    label: str = "",
    limits: Limits = DEFAULT_LIMITS,
    provenance: Optional[Provenance] = None,
) -> FiniteRing:
    """Checks the ring axioms on a pair of operation tables and freezes them into a FiniteRing.

    The pairwise axioms (commutative addition, identities, inverses) are always checked in full.
    The triple axioms (associativity, both distributive laws) are checked in full up to
    limits.exhaustive_axiom_order, and on a sample of triples seeded by the table digest above it,
    so the same tables always receive the same verdict.

    Arguments:
        order {int} -- Number of elements.
        add_table {array-like} -- order×order addition table.
        mul_table {array-like} -- order×order multiplication table.
        zero {int} -- Index of the additive identity.
        one {int} -- Index of the multiplicative identity.

    Keyword Arguments:
        label {str} -- Provenance text, usually the canonical expression (default: {""})
        limits {Limits} -- Size cap and axiom sampling bounds (default: {DEFAULT_LIMITS})
        provenance {Provenance} -- Construction metadata (default: {None})

    Raises:
        SizeCapExceeded: order is above the size cap.
        AxiomViolation: the first failing axiom, with a witness tuple.

    Returns:
        FiniteRing -- The validated ring.
    """
    check_size(order, limits)
    if order < 1:
        raise AxiomViolation(AxiomKind.TABLE_SHAPE, (order,))

    dtype = table_dtype(order)
    raw_add = np.asarray(add_table)
    raw_mul = np.asarray(mul_table)
    for raw in (raw_add, raw_mul):
        if raw.shape != (order, order):
            raise AxiomViolation(AxiomKind.TABLE_SHAPE, tuple(raw.shape))
        out_of_range = (raw < 0) | (raw >= order)
        if out_of_range.any():
            raise AxiomViolation(
                AxiomKind.TABLE_SHAPE, tuple(int(i) for i in np.argwhere(out_of_range)[0])
            )
    if not (0 <= zero < order and 0 <= one < order):
        raise AxiomViolation(AxiomKind.TABLE_SHAPE, (zero, one))

    add = raw_add.astype(dtype)
    mul = raw_mul.astype(dtype)
    everything = np.arange(order)

    _first_failure(add != add.T, AxiomKind.ADD_COMMUTATIVE)
    _first_failure(add[zero] != everything, AxiomKind.ADD_IDENTITY)
    hits = add == zero
    _first_failure(~hits.any(axis=1), AxiomKind.ADD_INVERSE)
    neg = hits.argmax(axis=1).astype(dtype)
    if one == zero and order > 1:
        raise AxiomViolation(AxiomKind.MUL_IDENTITY, (one,))
    _first_failure(
        (mul[one] != everything) | (mul[:, one] != everything), AxiomKind.MUL_IDENTITY
    )

    digest = table_digest(order, add, mul, zero, one)
    if order <= limits.exhaustive_axiom_order:
        _check_triples_exhaustively(add, mul)
    else:
        _check_sampled_triples(add, mul, limits.axiom_samples, int(digest[:16], 16))

    logger.debug("validated ring %s of order %d (%s)", label, order, digest[:12])
    return FiniteRing(
        frozen(add),
        frozen(mul),
        int(zero),
        int(one),
        frozen(neg),
        digest,
        label,
        provenance,
    )


def _first_failure(failures: np.ndarray, kind: AxiomKind, prefix: Tuple[int, ...] = ()) -> None:
    if failures.any():
        witness = tuple(int(i) for i in np.argwhere(failures)[0])
        raise AxiomViolation(kind, prefix + witness)


def _check_triples_exhaustively(add: np.ndarray, mul: np.ndarray) -> None:
    order = add.shape[0]
    for a in range(order):
        _first_failure(add[add[a]] != add[a][add], AxiomKind.ADD_ASSOCIATIVE, (a,))
    for a in range(order):
        _first_failure(mul[mul[a]] != mul[a][mul], AxiomKind.MUL_ASSOCIATIVE, (a,))
    for a in range(order):
        row = mul[a]
        _first_failure(
            row[add] != add[row[:, None], row[None, :]], AxiomKind.LEFT_DISTRIBUTIVE, (a,)
        )
    for a in range(order):
        column = mul[:, a]
        _first_failure(
            column[add] != add[column[:, None], column[None, :]],
            AxiomKind.RIGHT_DISTRIBUTIVE,
            (a,),
        )


def _check_sampled_triples(add: np.ndarray, mul: np.ndarray, samples: int, seed: int) -> None:
    order = add.shape[0]
    a, b, c = np.random.default_rng(seed).integers(0, order, size=(3, samples))
    checks = [
        (AxiomKind.ADD_ASSOCIATIVE, add[add[a, b], c] != add[a, add[b, c]]),
        (AxiomKind.MUL_ASSOCIATIVE, mul[mul[a, b], c] != mul[a, mul[b, c]]),
        (AxiomKind.LEFT_DISTRIBUTIVE, mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
        (AxiomKind.RIGHT_DISTRIBUTIVE, mul[add[b, c], a] != add[mul[b, a], mul[c, a]]),
    ]
    for kind, failures in checks:
        if failures.any():
            bad = np.flatnonzero(failures)
            least = bad[np.lexsort((c[bad], b[bad], a[bad]))[0]]
            raise AxiomViolation(kind, (int(a[least]), int(b[least]), int(c[least])))


def _check_element(ring: FiniteRing, element: RingElement) -> int:
    if element.ring_hash != ring.digest or not 0 <= element.index < ring.order:
        raise ForeignElement(
            f"{element!r} does not belong to {ring.label or ring.digest[:12]}"
        )
    return element.index


def elem_op(
    ring: FiniteRing,
    op: Union[ElementOp, str],
    a: RingElement,
    b: Optional[RingElement] = None,
) -> RingElement:
    """Applies one ring operation by table lookup.

    Raises:
        ForeignElement: an operand belongs to a different ring.
    """
    op = ElementOp(op)
    left = _check_element(ring, a)
    if op is ElementOp.NEG:
        return RingElement(int(ring.neg[left]), ring.digest)
    if b is None:
        raise ValueError(f"{op.value} needs two operands")
    right = _check_element(ring, b)
    if op is ElementOp.ADD:
        result = ring.add[left, right]
    elif op is ElementOp.MUL:
        result = ring.mul[left, right]
    else:
        result = ring.add[left, ring.neg[right]]
    return RingElement(int(result), ring.digest)


def power_index(ring: FiniteRing, a: int, k: int) -> int:
    if k < 0:
        raise ValueError("negative exponents are not defined in a ring")
    result, base = ring.one, a
    while k:
        if k & 1:
            result = int(ring.mul[result, base])
        base = int(ring.mul[base, base])
        k >>= 1
    return result


def power(ring: FiniteRing, a: RingElement, k: int) -> RingElement:
    return RingElement(power_index(ring, _check_element(ring, a), k), ring.digest)


def power_vector(ring: FiniteRing, k: int) -> np.ndarray:
    """x^k for every element x at once."""
    if k < 0:
        raise ValueError("negative exponents are not defined in a ring")
    result = np.full(ring.order, ring.one, dtype=np.int64)
    base = np.arange(ring.order)
    while k:
        if k & 1:
            result = ring.mul[result, base]
        base = ring.mul[base, base]
        k >>= 1
    return np.asarray(result, dtype=np.int64)


def power_orbit_hits(ring: FiniteRing, target: np.ndarray, max_exponent: int) -> np.ndarray:
    """Mask of the elements x with x^k in target for some 1 ≤ k ≤ max_exponent."""
    everything = np.arange(ring.order)
    current = everything.copy()
    hits = target[current].copy()
    for _ in range(max_exponent - 1):
        if hits.all():
            break
        current = ring.mul[current, everything]
        hits |= target[current]
    return hits


def characteristic(ring: FiniteRing) -> int:
    """The additive order of 1; the zero ring has characteristic 1."""
    k, value = 1, ring.one
    while value != ring.zero:
        value = int(ring.add[value, ring.one])
        k += 1
    return k


def is_commutative(ring: FiniteRing) -> bool:
    return bool((ring.mul == ring.mul.T).all())
