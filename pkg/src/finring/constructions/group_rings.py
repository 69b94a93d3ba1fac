"""Group rings RG and their augmentation.

Encoding: an element of RG is a function f: G → R; the coefficient f(g) is digit g of its
little-endian mixed-radix index over |R|, so the group element g itself (coefficient 1 at g) has
index one·|R|^g and RC_1 has exactly R's tables.
"""

import logging
from functools import reduce
from typing import List, Tuple

import numpy as np

from finring.constructions.basic import assemble_ring, pairwise
from finring.constructions.homs import Ideal, RingHom
from finring.groups import FiniteGroup
from finring.rings import FiniteRing, Provenance
from finring.util import DEFAULT_LIMITS, FinringError, Limits, MixedRadix, check_size


logger = logging.getLogger(__name__)


class NotAGroupRing(FinringError):
    pass


class GroupRingProvenance(Provenance):
    kind = "group-ring"

    def __init__(self, base: FiniteRing, group: FiniteGroup, radix: MixedRadix):
        self.base = base
        self.group = group
        self.radix = radix

    def surjections(self, ring: FiniteRing) -> List[Tuple[str, RingHom]]:
        return [("augmentation", augmentation(ring)[0])]


def group_ring(
    base: FiniteRing, group: FiniteGroup, limits: Limits = DEFAULT_LIMITS
) -> FiniteRing:
    """RG with pointwise addition and convolution (f·h)(x) = Σ_g f(g)·h(g⁻¹x).

    Raises:
        SizeCapExceeded: |R|^|G| is above the size cap.
    """
    check_size(base.order**group.order, limits)
    radix = MixedRadix([base.order] * group.order)
    digits = radix.digits

    add_columns = [pairwise(base.add, digits[:, g], digits[:, g]) for g in range(group.order)]
    mul_columns = []
    for x in range(group.order):
        terms = [
            pairwise(base.mul, digits[:, g], digits[:, int(group.cayley[group.inv[g], x])])
            for g in range(group.order)
        ]
        mul_columns.append(reduce(lambda a, b: base.add[a, b], terms))

    one_digits = [base.zero] * group.order
    one_digits[group.identity] = base.one
    logger.debug("building the group ring of %s over %s", group.label, base.label)
    return assemble_ring(
        radix,
        add_columns,
        mul_columns,
        [base.zero] * group.order,
        one_digits,
        f"GR({base.label},{group.label})",
        limits,
        GroupRingProvenance(base, group, radix),
    )


def augmentation(ring: FiniteRing) -> Tuple[RingHom, Ideal]:
    """The augmentation ε: RG → R summing coefficients, and its kernel Δ(RG).

    Raises:
        NotAGroupRing: the ring was not built by group_ring.
    """
    provenance = ring.provenance
    if not isinstance(provenance, GroupRingProvenance):
        raise NotAGroupRing(f"{ring.label or ring.digest[:12]} was not built as a group ring")
    base = provenance.base
    digits = provenance.radix.digits
    total = np.full(ring.order, base.zero, dtype=np.int64)
    for g in range(provenance.group.order):
        total = base.add[total, digits[:, g]]
    epsilon = RingHom(ring, base, total).check()
    return epsilon, epsilon.kernel()
