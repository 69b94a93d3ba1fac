"""The deterministic catalog of rings the audit quantifies over.

Every entry is named by a canonical expression that re-evaluates to the entry's own digest.  Rings
are deduplicated by digest; a ring reached again through another construction is kept as an alias
so construction-driven claims (group rings over C(1), GF(p,1) next to Z(p)) still see it.
"""

import logging
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from finring.constructions import ideal_generated
from finring.exprlang import EvaluationError, Evaluator, canonical
from finring.radicals import idempotent_mask
from finring.rings import FiniteRing
from finring.util import DEFAULT_LIMITS, Limits, SizeCapExceeded


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogConfig(object):
    """What the catalog is built from.  The closure steps each run once over the base rings."""

    zn_orders: Tuple[int, ...] = tuple(range(2, 13))
    gf_orders: Tuple[Tuple[int, int], ...] = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))
    groups: Tuple[str, ...] = (
        "C(1)",
        "C(2)",
        "C(3)",
        "C(4)",
        "Prod(C(2),C(2))",
        "Prod(C(2),C(3))",
        "S3",
    )
    pair_products: bool = True
    matrix_sizes: Tuple[int, ...] = (2,)
    triangular_sizes: Tuple[int, ...] = (2, 3)
    trivial_extensions: bool = True
    group_rings: bool = True
    triple_product_bases: Tuple[str, ...] = ("Z(2)", "Z(3)", "Z(4)", "Z(9)", "GF(2,2)")
    extra_group_ring_bases: Tuple[str, ...] = ("Prod(Z(2),Z(3))",)
    corners: bool = True
    quotients: bool = True
    extra_expressions: Tuple[str, ...] = field(default=())

    def base_expressions(self) -> List[str]:
        return [f"Z({n})" for n in self.zn_orders] + [f"GF({p},{k})" for p, k in self.gf_orders]

    @staticmethod
    def of_expressions(expressions: Sequence[str]) -> "CatalogConfig":
        """A catalog holding exactly the given expressions and nothing derived from them."""
        return CatalogConfig(
            zn_orders=(),
            gf_orders=(),
            groups=(),
            pair_products=False,
            matrix_sizes=(),
            triangular_sizes=(),
            trivial_extensions=False,
            group_rings=False,
            triple_product_bases=(),
            extra_group_ring_bases=(),
            corners=False,
            quotients=False,
            extra_expressions=tuple(expressions),
        )

    def encode_json(self) -> dict:
        return asdict(self)


class CatalogEntry(object):
    def __init__(self, expression: str, ring: FiniteRing):
        self.expression = expression
        self.ring = ring

    @property
    def digest(self) -> str:
        return self.ring.digest

    def __repr__(self) -> str:
        return f"<CatalogEntry {self.expression} order={self.ring.order}>"

    def encode_json(self) -> dict:
        return {"expression": self.expression, "order": self.ring.order, "hash": self.digest}


class Catalog(object):
    def __init__(
        self,
        entries: Optional[List[CatalogEntry]] = None,
        aliases: Optional[List[CatalogEntry]] = None,
        config: Optional[CatalogConfig] = None,
    ):
        self.entries: List[CatalogEntry] = list(entries or [])
        self.aliases: List[CatalogEntry] = list(aliases or [])
        self.config = config or CatalogConfig()
        self.__by_digest: Dict[str, CatalogEntry] = {e.digest: e for e in self.entries}
        self.__by_expression: Dict[str, CatalogEntry] = {
            e.expression: e for e in self.entries + self.aliases
        }

    def add(self, expression: str, ring: FiniteRing) -> bool:
        """Adds a ring, as an alias when its digest is already present; False when the
        expression itself is already known."""
        if expression in self.__by_expression:
            return False
        entry = CatalogEntry(expression, ring)
        self.__by_expression[expression] = entry
        if ring.digest in self.__by_digest:
            self.aliases.append(entry)
        else:
            self.__by_digest[ring.digest] = entry
            self.entries.append(entry)
        return True

    def find(self, expression: str) -> Optional[CatalogEntry]:
        return self.__by_expression.get(expression)

    def by_digest(self, digest: str) -> Optional[CatalogEntry]:
        return self.__by_digest.get(digest)

    def presentations(self) -> List[CatalogEntry]:
        """Entries followed by aliases, each in build order."""
        return self.entries + self.aliases

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __contains__(self, expression: object) -> bool:
        return expression in self.__by_expression


class _CatalogBuilder(object):
    def __init__(self, config: CatalogConfig, limits: Limits, evaluator: Evaluator):
        self.config = config
        self.limits = limits
        self.evaluator = evaluator
        self.catalog = Catalog(config=config)

    def offer(self, expression: str) -> Optional[FiniteRing]:
        """Evaluates and adds one expression; constructions above the size cap are skipped."""
        expression = canonical(expression)
        if expression in self.catalog:
            entry = self.catalog.find(expression)
            return entry.ring if entry else None
        try:
            ring = self.evaluator.ring(expression)
        except EvaluationError as ex:
            if isinstance(ex.__cause__, SizeCapExceeded):
                logger.info("skipping %s: %s", expression, ex.__cause__)
                return None
            raise
        self.catalog.add(expression, ring)
        return ring

    def build(self) -> Catalog:
        config = self.config
        base = [e for e in config.base_expressions() if self.offer(e) is not None]
        logger.info("catalog base: %d rings", len(base))

        if config.pair_products:
            for left, right in combinations_with_replacement(base, 2):
                self.offer(f"Prod({left},{right})")
        for k in config.matrix_sizes:
            for expr in base:
                self.offer(f"M({k},{expr})")
        for k in config.triangular_sizes:
            for expr in base:
                self.offer(f"T({k},{expr})")
        if config.trivial_extensions:
            for expr in base:
                self.offer(f"TrivExt({expr})")

        group_ring_bases = base + [e for e in config.extra_group_ring_bases if e in self.catalog]
        if config.group_rings:
            for expr in group_ring_bases:
                for group in config.groups:
                    self.offer(f"GR({expr},{group})")

        triples = [e for e in config.triple_product_bases if e in base]
        for first, second, third in combinations_with_replacement(triples, 3):
            self.offer(f"Prod({first},{second},{third})")

        closed = list(self.catalog.entries)
        for entry in closed:
            if entry.ring.order > self.limits.local_order:
                continue
            if config.corners:
                self.__offer_corners(entry)
            if config.quotients:
                self.__offer_quotients(entry)

        for expr in config.extra_expressions:
            self.offer(expr)

        logger.info(
            "catalog: %d rings, %d aliases", len(self.catalog), len(self.catalog.aliases)
        )
        return self.catalog

    def __offer_corners(self, entry: CatalogEntry) -> None:
        ring = entry.ring
        for e in np.flatnonzero(idempotent_mask(ring)):
            if e not in (ring.zero, ring.one):
                self.offer(f"Corner({entry.expression},{int(e)})")

    def __offer_quotients(self, entry: CatalogEntry) -> None:
        ring = entry.ring
        seen = set()
        for x in range(ring.order):
            if x == ring.zero:
                continue
            ideal = ideal_generated(ring, [x])
            if ring.one in ideal or ideal.members in seen:
                continue
            seen.add(ideal.members)
            self.offer(f"Quot({entry.expression},[{x}])")


def build_catalog(
    config: Optional[CatalogConfig] = None,
    limits: Limits = DEFAULT_LIMITS,
    evaluator: Optional[Evaluator] = None,
) -> Catalog:
    """Builds the catalog: base rings, then one round of products, matrix, triangular and trivial
    extension rings, group rings and triple products, then corners and single-generator quotients
    of the rings up to limits.local_order, then any extra expressions.

    Arguments:
        config {CatalogConfig} -- What to build from (default: {CatalogConfig()})
        limits {Limits} -- Size cap; larger constructions are skipped, never fatal (default: {DEFAULT_LIMITS})
        evaluator {Evaluator} -- Shared expression evaluator (default: {a fresh one})

    Returns:
        Catalog -- Entries in build order.
    """
    builder = _CatalogBuilder(config or CatalogConfig(), limits, evaluator or Evaluator(limits))
    return builder.build()
