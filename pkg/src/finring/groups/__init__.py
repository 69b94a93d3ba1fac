"""Finite groups given by Cayley tables, with the element-order and p-group predicates
group rings need.  Presets cover cyclic groups, their products and S_3."""

import logging
from enum import Enum
from itertools import permutations
from typing import List, Optional, Tuple, Union

import numpy as np
from sympy import factorint

from finring.util import (
    DEFAULT_LIMITS,
    FinringError,
    InternalInconsistency,
    Limits,
    MixedRadix,
    check_size,
    frozen,
    require_prime,
    table_dtype,
)


logger = logging.getLogger(__name__)


class GroupAxiomKind(Enum):
    TABLE_SHAPE = "table-shape"
    IDENTITY = "identity"
    INVERSE = "inverse"
    ASSOCIATIVE = "associative"


class GroupAxiomViolation(FinringError):
    def __init__(self, kind: GroupAxiomKind, witness: Tuple[int, ...]):
        super().__init__(f"{kind.value} group axiom fails at {witness}")
        self.kind = kind
        self.witness = witness


class FiniteGroup(object):
    def __init__(self, cayley: np.ndarray, identity: int, inv: np.ndarray, label: str = ""):
        self.cayley = cayley
        self.identity = identity
        self.inv = inv
        self.label = label

    @property
    def order(self) -> int:
        return int(self.cayley.shape[0])

    def relabel(self, label: str) -> "FiniteGroup":
        return FiniteGroup(self.cayley, self.identity, self.inv, label)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and other.identity == self.identity
            and np.array_equal(other.cayley, self.cayley)
        )

    def __hash__(self) -> int:
        return hash((self.identity, self.cayley.tobytes()))

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label or '?'} order={self.order}>"

    def encode_json(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "cayley": self.cayley.tolist(),
            "label": self.label,
        }


def validate_group(
    cayley: Union[np.ndarray, List[List[int]]],
    identity: int,
    label: str = "",
    limits: Limits = DEFAULT_LIMITS,
) -> FiniteGroup:
    """Checks the group axioms on a Cayley table.

    Raises:
        SizeCapExceeded: the table is larger than the size cap.
        GroupAxiomViolation: the first failing axiom, with a witness tuple.
    """
    table = np.asarray(cayley)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise GroupAxiomViolation(GroupAxiomKind.TABLE_SHAPE, tuple(table.shape))
    order = table.shape[0]
    check_size(order, limits)
    out_of_range = (table < 0) | (table >= order)
    if out_of_range.any():
        raise GroupAxiomViolation(
            GroupAxiomKind.TABLE_SHAPE, tuple(int(i) for i in np.argwhere(out_of_range)[0])
        )
    if not 0 <= identity < order:
        raise GroupAxiomViolation(GroupAxiomKind.TABLE_SHAPE, (identity,))

    table = table.astype(table_dtype(order))
    everything = np.arange(order)
    bad = (table[identity] != everything) | (table[:, identity] != everything)
    if bad.any():
        raise GroupAxiomViolation(GroupAxiomKind.IDENTITY, (int(np.argmax(bad)),))

    two_sided = (table == identity) & (table.T == identity)
    missing = ~two_sided.any(axis=1)
    if missing.any():
        raise GroupAxiomViolation(GroupAxiomKind.INVERSE, (int(np.argmax(missing)),))
    inv = two_sided.argmax(axis=1).astype(table.dtype)

    for a in range(order):
        failures = table[table[a]] != table[a][table]
        if failures.any():
            b, c = np.argwhere(failures)[0]
            raise GroupAxiomViolation(GroupAxiomKind.ASSOCIATIVE, (a, int(b), int(c)))

    return FiniteGroup(frozen(table), int(identity), frozen(inv), label)


def cyclic_group(m: int, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    if m < 1:
        raise ValueError("a cyclic group needs at least one element")
    check_size(m, limits)
    everything = np.arange(m)
    return validate_group(np.add.outer(everything, everything) % m, 0, f"C({m})", limits)


def group_product(
    first: FiniteGroup, second: FiniteGroup, limits: Limits = DEFAULT_LIMITS
) -> FiniteGroup:
    """Direct product; the pair (g, h) has index g + |first|·h."""
    check_size(first.order * second.order, limits)
    radix = MixedRadix([first.order, second.order])
    digits = radix.digits
    g, h = digits[:, 0], digits[:, 1]
    cayley = radix.combine(
        [
            first.cayley[g[:, None], g[None, :]],
            second.cayley[h[:, None], h[None, :]],
        ]
    )
    identity = radix.encode([first.identity, second.identity])
    return validate_group(
        cayley, identity, f"Prod({first.label},{second.label})", limits
    )


def symmetric_group_3(limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """S_3 on the permutations of (0, 1, 2) in lexicographic order; the product p·q
    applies q first."""
    perms = list(permutations(range(3)))
    position = {p: i for i, p in enumerate(perms)}
    cayley = [
        [position[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms
    ]
    return validate_group(cayley, position[(0, 1, 2)], "S3", limits)


def element_order(group: FiniteGroup, g: int) -> int:
    if not 0 <= g < group.order:
        raise ValueError(f"{g} is not an element of {group.label}")
    k, value = 1, g
    while value != group.identity:
        value = int(group.cayley[value, g])
        k += 1
    return k


def element_orders(group: FiniteGroup) -> List[int]:
    return [element_order(group, g) for g in range(group.order)]


def _is_power_of(value: int, p: int) -> bool:
    return value == 1 or set(factorint(value)) == {p}


def is_p_group(group: FiniteGroup, p: int) -> bool:
    """True iff every element order is a power of p.  The order-of-group test is run as well and
    must agree (Cauchy's theorem)."""
    require_prime(p)
    by_elements = all(_is_power_of(k, p) for k in element_orders(group))
    by_order = _is_power_of(group.order, p)
    if by_elements != by_order:
        logger.error("p-group tests disagree on %s for p=%d", group.label, p)
        raise InternalInconsistency(
            f"p-group tests disagree on {group.label} for p={p}; this should never happen, file a bug."
        )
    return by_elements


def group_prime(group: FiniteGroup) -> Optional[int]:
    """The prime p for which a nontrivial group is a p-group; None when it is not a p-group or
    when the group is trivial (a p-group for every p)."""
    if group.order == 1:
        return None
    primes = list(factorint(group.order))
    return primes[0] if len(primes) == 1 else None


def is_trivial(group: FiniteGroup) -> bool:
    return group.order == 1
