"""Base rings (Z_n, GF(p^k)) and direct products.

Encodings:
    Z(n)        -- element i is the residue i.
    GF(p, k)    -- element i is the polynomial whose coefficient of x^d is digit d of i in base p,
                   reduced modulo the shipped Conway polynomial for (p, k).
    Prod(R...)  -- little-endian mixed radix: the tuple (a_0, a_1, ...) has index
                   a_0 + |R_0|·a_1 + |R_0||R_1|·a_2 + ...
"""

import logging
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from finring.constructions.homs import RingHom
from finring.rings import FiniteRing, Provenance, validate_ring
from finring.util import (
    DEFAULT_LIMITS,
    FinringError,
    Limits,
    MixedRadix,
    check_size,
    require_prime,
)


logger = logging.getLogger(__name__)


class NoPolynomialShipped(FinringError):
    pass


# Conway polynomials, constant coefficient first, for every p^k ≤ 64.
CONWAY_POLYNOMIALS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 1): (9, 1),
    (13, 1): (11, 1),
    (17, 1): (14, 1),
    (19, 1): (17, 1),
    (23, 1): (18, 1),
    (29, 1): (27, 1),
    (31, 1): (28, 1),
    (37, 1): (35, 1),
    (41, 1): (35, 1),
    (43, 1): (40, 1),
    (47, 1): (42, 1),
    (53, 1): (51, 1),
    (59, 1): (57, 1),
    (61, 1): (59, 1),
}


class ProductProvenance(Provenance):
    kind = "product"

    def __init__(self, factors: Sequence[FiniteRing], projections: Sequence[RingHom]):
        self.factors = list(factors)
        self.projections = list(projections)

    def surjections(self, ring: FiniteRing) -> List[Tuple[str, RingHom]]:
        return [
            (f"projection {i} onto {factor.label}", projection)
            for i, (factor, projection) in enumerate(zip(self.factors, self.projections))
        ]


def assemble_ring(
    radix: MixedRadix,
    add_columns: Sequence[np.ndarray],
    mul_columns: Sequence[np.ndarray],
    zero_digits: Sequence[int],
    one_digits: Sequence[int],
    label: str,
    limits: Limits,
    provenance: Optional[Provenance] = None,
) -> FiniteRing:
    """Validates a ring whose elements are digit tuples; column d of each table holds
    digit d of the result for every pair of operands."""
    return validate_ring(
        radix.order,
        radix.combine(add_columns),
        radix.combine(mul_columns),
        radix.encode(zero_digits),
        radix.encode(one_digits),
        label,
        limits,
        provenance,
    )


def pairwise(table: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """table[left[a], right[b]] for every pair (a, b)."""
    return table[left[:, None], right[None, :]]


def ring_zn(n: int, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    if n < 1:
        raise ValueError("Z(n) needs n ≥ 1")
    check_size(n, limits)
    everything = np.arange(n)
    return validate_ring(
        n,
        np.add.outer(everything, everything) % n,
        np.multiply.outer(everything, everything) % n,
        0,
        1 % n,
        f"Z({n})",
        limits,
    )


def ring_gf(p: int, k: int, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """The field of order p^k.  GF(p, 1) has exactly the tables of Z(p).

    Raises:
        NotPrime: p is not prime.
        NoPolynomialShipped: no Conway polynomial ships for (p, k).
        SizeCapExceeded: p^k is above the size cap.
    """
    require_prime(p)
    if k < 1:
        raise ValueError("GF(p, k) needs k ≥ 1")
    check_size(p**k, limits)
    if (p, k) not in CONWAY_POLYNOMIALS:
        raise NoPolynomialShipped(f"no Conway polynomial ships for GF({p}^{k})")
    poly = CONWAY_POLYNOMIALS[(p, k)]

    radix = MixedRadix([p] * k)
    digits = radix.digits
    q = radix.order
    product = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            product[:, :, i + j] += np.multiply.outer(digits[:, i], digits[:, j])
    # x^t = -(poly[0] x^(t-k) + ... + poly[k-1] x^(t-1)) for the monic Conway polynomial
    for t in range(2 * k - 2, k - 1, -1):
        carry = product[:, :, t] % p
        product[:, :, t] = 0
        for i in range(k):
            product[:, :, t - k + i] -= carry * poly[i]

    residues = np.arange(p)
    digit_sum = np.add.outer(residues, residues) % p
    add_columns = [pairwise(digit_sum, digits[:, d], digits[:, d]) for d in range(k)]
    mul_columns = [product[:, :, d] % p for d in range(k)]
    logger.debug("building GF(%d^%d) from %s", p, k, poly)
    return assemble_ring(
        radix,
        add_columns,
        mul_columns,
        [0] * k,
        [1] + [0] * (k - 1),
        f"GF({p},{k})",
        limits,
    )


def direct_product(
    rings: Sequence[FiniteRing], limits: Limits = DEFAULT_LIMITS
) -> Tuple[FiniteRing, List[RingHom]]:
    """Componentwise product of one or more rings, with its projections.

    Raises:
        SizeCapExceeded: the product of the orders is above the size cap.

    Returns:
        Tuple[FiniteRing, List[RingHom]] -- the product ring and one projection per factor.
    """
    if not rings:
        raise ValueError("a direct product needs at least one factor")
    check_size(prod(r.order for r in rings), limits)
    radix = MixedRadix([r.order for r in rings])
    digits = radix.digits

    product = assemble_ring(
        radix,
        [pairwise(r.add, digits[:, i], digits[:, i]) for i, r in enumerate(rings)],
        [pairwise(r.mul, digits[:, i], digits[:, i]) for i, r in enumerate(rings)],
        [r.zero for r in rings],
        [r.one for r in rings],
        "Prod(" + ",".join(r.label for r in rings) + ")",
        limits,
    )
    projections = [
        RingHom(product, factor, digits[:, i]).check() for i, factor in enumerate(rings)
    ]
    product = product.relabel(product.label, ProductProvenance(rings, projections))
    return product, projections
