"""Every ring the audit quantifies over: Z_n, GF(p^k), direct products, M_k(R), T_k(R),
trivial extensions, quotients, corners, generated subrings and group rings.

Each constructor checks the size cap before allocating, validates its output with
validate_ring, and records how the ring was built on ring.provenance."""

from finring.constructions.homs import Ideal, NotAnIdeal, RingHom, ideal_violation
from finring.constructions.basic import (
    CONWAY_POLYNOMIALS,
    NoPolynomialShipped,
    ProductProvenance,
    direct_product,
    ring_gf,
    ring_zn,
)
from finring.constructions.matrices import (
    MatrixProvenance,
    TriangularProvenance,
    TrivialExtensionProvenance,
    matrix_index,
    matrix_ring,
    trivial_extension,
    upper_triangular,
)
from finring.constructions.ideals import (
    CornerProvenance,
    NotIdempotent,
    QuotientProvenance,
    ZeroCorner,
    corner,
    ideal_generated,
    quotient,
    restrict,
    subring_closure,
    subring_generated,
)
from finring.constructions.group_rings import (
    GroupRingProvenance,
    NotAGroupRing,
    augmentation,
    group_ring,
)

__all__ = [
    "CONWAY_POLYNOMIALS",
    "CornerProvenance",
    "GroupRingProvenance",
    "Ideal",
    "MatrixProvenance",
    "NoPolynomialShipped",
    "NotAGroupRing",
    "NotAnIdeal",
    "NotIdempotent",
    "ProductProvenance",
    "QuotientProvenance",
    "RingHom",
    "TriangularProvenance",
    "TrivialExtensionProvenance",
    "ZeroCorner",
    "augmentation",
    "corner",
    "direct_product",
    "group_ring",
    "ideal_generated",
    "ideal_violation",
    "matrix_index",
    "matrix_ring",
    "quotient",
    "restrict",
    "ring_gf",
    "ring_zn",
    "subring_closure",
    "subring_generated",
    "trivial_extension",
    "upper_triangular",
]
