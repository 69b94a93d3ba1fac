import logging
from typing import Dict, Optional

from finring.classify import (
    EXPENSIVE_VERDICTS,
    ClassificationRecord,
    Verdict,
    canonical_predicate,
    classify,
)
from finring.exprlang import Evaluator
from finring.radicals import ProfileStore, RingProfile
from finring.rings import FiniteRing
from finring.storage import ClassificationCache
from finring.theorems.catalog import Catalog
from finring.util import DEFAULT_LIMITS, Limits


logger = logging.getLogger(__name__)


class AuditContext(object):
    """Everything the claim checkers share: the limits, the catalog, one profile per ring and one
    classification record per ring, optionally backed by the on-disk cache.

    Records are classified non-strictly; a broken implication lattice is reported by the lattice
    claim instead of aborting the audit.
    """

    def __init__(
        self,
        limits: Limits = DEFAULT_LIMITS,
        catalog: Optional[Catalog] = None,
        cache: Optional[ClassificationCache] = None,
        evaluator: Optional[Evaluator] = None,
    ):
        self.limits = limits
        self.catalog = catalog if catalog is not None else Catalog()
        self.cache = cache
        self.evaluator = evaluator or Evaluator(limits)
        self.profiles = ProfileStore(limits)
        self.__records: Dict[str, ClassificationRecord] = {}

    def profile(self, ring: FiniteRing) -> RingProfile:
        return self.profiles.profile(ring)

    def record(self, ring: FiniteRing) -> ClassificationRecord:
        known = self.__records.get(ring.digest)
        if known is None:
            known = self.__from_cache(ring)
            if known is None:
                known = classify(self.profile(ring), self.limits, strict=False)
                if self.cache is not None:
                    self.cache.put(known)
            self.__records[ring.digest] = known
        return known

    def __from_cache(self, ring: FiniteRing) -> Optional[ClassificationRecord]:
        if self.cache is None:
            return None
        cached = self.cache.get(ring.digest)
        if cached is None:
            return None
        expensive = self.limits.allows_expensive(ring.order)
        if expensive and any(cached.verdicts[name] is None for name in EXPENSIVE_VERDICTS):
            logger.debug("cached record of %s lacks verdicts these limits allow", ring.label)
            return None
        if not expensive:
            verdicts = dict(cached.verdicts)
            verdicts.update((name, None) for name in EXPENSIVE_VERDICTS)
            return ClassificationRecord(cached.ring_hash, verdicts, cached.characteristic)
        return cached

    def verdict(self, ring: FiniteRing, name: str) -> Verdict:
        return self.record(ring).verdicts[canonical_predicate(name)]

    def holds(self, ring: FiniteRing, name: str) -> bool:
        """The verdict for a predicate that is never skipped."""
        verdict = self.verdict(ring, name)
        if verdict is None:
            raise ValueError(f"{name} was skipped on {ring.label}; use verdict() for expensive predicates")
        return verdict

    def multiple_in(self, ring: FiniteRing, k: int, name: str) -> bool:
        """Whether k·1 lies in one of the profile's sets, e.g. multiple_in(R, 2, "jacobson")."""
        return self.profile(ring).contains(name, ring.multiple_of_one(k))
