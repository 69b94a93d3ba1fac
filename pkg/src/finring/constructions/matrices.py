"""Matrix rings, upper triangular rings and the trivial extension T(R, R).

Encodings (all little-endian mixed radix over the base ring's indices):
    M(k, R)     -- entry (i, j) is digit i·k + j.
    T(k, R)     -- the entries (i, j) with i ≤ j in row-major order are digits 0, 1, 2, ...;
                   for k = 2 that is (0,0) → 0, (0,1) → 1, (1,1) → 2.
    TrivExt(R)  -- the pair (r, m) is digit 0 = r, digit 1 = m, i.e. index r + |R|·m.
"""

import logging
from functools import reduce
from typing import Dict, List, Sequence, Tuple

import numpy as np

from finring.constructions.basic import assemble_ring, pairwise
from finring.rings import FiniteRing, Provenance
from finring.util import DEFAULT_LIMITS, Limits, MixedRadix, check_size


logger = logging.getLogger(__name__)


class MatrixProvenance(Provenance):
    kind = "matrix"

    def __init__(self, base: FiniteRing, k: int):
        self.base = base
        self.k = k


class TriangularProvenance(Provenance):
    kind = "triangular"

    def __init__(self, base: FiniteRing, k: int):
        self.base = base
        self.k = k


class TrivialExtensionProvenance(Provenance):
    kind = "trivial-extension"

    def __init__(self, base: FiniteRing):
        self.base = base


def _matrix_product_columns(
    base: FiniteRing,
    digits: np.ndarray,
    positions: Dict[Tuple[int, int], int],
    k: int,
) -> List[np.ndarray]:
    columns = []
    for (i, j), _ in sorted(positions.items(), key=lambda item: item[1]):
        terms = [
            pairwise(base.mul, digits[:, positions[(i, l)]], digits[:, positions[(l, j)]])
            for l in range(k)
            if (i, l) in positions and (l, j) in positions
        ]
        columns.append(reduce(lambda x, y: base.add[x, y], terms))
    return columns


def _matrix_like(
    base: FiniteRing,
    k: int,
    positions: Dict[Tuple[int, int], int],
    label: str,
    limits: Limits,
    provenance: Provenance,
) -> FiniteRing:
    check_size(base.order ** len(positions), limits)
    radix = MixedRadix([base.order] * len(positions))
    digits = radix.digits
    ordered = sorted(positions.items(), key=lambda item: item[1])
    add_columns = [pairwise(base.add, digits[:, d], digits[:, d]) for _, d in ordered]
    mul_columns = _matrix_product_columns(base, digits, positions, k)
    one_digits = [base.one if i == j else base.zero for (i, j), _ in ordered]
    logger.debug("building %s with %d elements", label, radix.order)
    return assemble_ring(
        radix,
        add_columns,
        mul_columns,
        [base.zero] * len(positions),
        one_digits,
        label,
        limits,
        provenance,
    )


def matrix_ring(base: FiniteRing, k: int, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """The ring of k×k matrices over base; M(1, R) has exactly R's tables.

    Raises:
        SizeCapExceeded: |R|^(k²) is above the size cap.
    """
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    check_size(base.order ** (k * k), limits)
    positions = {(i, j): i * k + j for i in range(k) for j in range(k)}
    return _matrix_like(
        base, k, positions, f"M({k},{base.label})", limits, MatrixProvenance(base, k)
    )


def matrix_index(base: FiniteRing, k: int, entries: Sequence[Sequence[int]]) -> int:
    """Index in M(k, base) of the matrix with the given entries (base ring indices)."""
    radix = MixedRadix([base.order] * (k * k))
    return radix.encode([entries[i][j] for i in range(k) for j in range(k)])


def upper_triangular(base: FiniteRing, k: int, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    check_size(base.order ** (k * (k + 1) // 2), limits)
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    positions = {cell: d for d, cell in enumerate(cells)}
    return _matrix_like(
        base, k, positions, f"T({k},{base.label})", limits, TriangularProvenance(base, k)
    )


def trivial_extension(base: FiniteRing, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """T(R, R): pairs (r, m) with (r, m)(s, n) = (rs, rn + ms), isomorphic to R[x]/(x²)."""
    n = base.order
    check_size(n * n, limits)
    radix = MixedRadix([n, n])
    digits = radix.digits
    r, m = digits[:, 0], digits[:, 1]
    mul_columns = [
        pairwise(base.mul, r, r),
        base.add[pairwise(base.mul, r, m), pairwise(base.mul, m, r)],
    ]
    return assemble_ring(
        radix,
        [pairwise(base.add, r, r), pairwise(base.add, m, m)],
        mul_columns,
        [base.zero, base.zero],
        [base.one, base.zero],
        f"TrivExt({base.label})",
        limits,
        TrivialExtensionProvenance(base),
    )
