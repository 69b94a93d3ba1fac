import json

import numpy as np
import pytest

from finring.classify import classify
from finring.groups import cyclic_group
from finring.radicals import RingProfile
from finring.rings import AxiomKind, AxiomViolation
from finring.storage import (
    ClassificationCache,
    MalformedFile,
    dumps,
    load_group,
    load_ring,
    save_group,
    save_ring,
)
from finring.util import Limits, SizeCapExceeded


def test_saved_rings_load_with_the_same_digest(tmp_path, ring):
    original = ring("T(2,Z(3))")
    path = tmp_path / "t2z3.json"
    save_ring(original, path)
    loaded = load_ring(path)
    assert loaded.digest == original.digest
    assert loaded.label == "T(2,Z(3))"


def test_tampered_ring_files_are_rejected(tmp_path, ring):
    path = tmp_path / "z3.json"
    save_ring(ring("Z(3)"), path)
    raw = json.loads(path.read_text())
    raw["mul"][2][2] = 2
    path.write_text(json.dumps(raw))
    with pytest.raises(AxiomViolation) as ex:
        load_ring(path)
    assert ex.value.kind is AxiomKind.LEFT_DISTRIBUTIVE


def test_malformed_files(tmp_path):
    garbage = tmp_path / "garbage.json"
    garbage.write_text("not json")
    with pytest.raises(MalformedFile):
        load_ring(garbage)
    partial = tmp_path / "partial.json"
    partial.write_text(json.dumps({"order": 1, "zero": 0, "one": 0}))
    with pytest.raises(MalformedFile):
        load_ring(partial)


def test_loading_respects_the_size_cap(tmp_path, ring):
    path = tmp_path / "z10.json"
    save_ring(ring("Z(10)"), path)
    with pytest.raises(SizeCapExceeded):
        load_ring(path, Limits(size_cap=5))


def test_groups(tmp_path):
    path = tmp_path / "c4.json"
    save_group(cyclic_group(4), path)
    assert load_group(path) == cyclic_group(4)
    raw = json.loads(path.read_text())
    raw["order"] = 5
    path.write_text(json.dumps(raw))
    with pytest.raises(MalformedFile):
        load_group(path)


def test_dumps_handles_numpy_values():
    encoded = json.loads(dumps({"n": np.int16(3), "b": np.bool_(True), "a": np.arange(3)}))
    assert encoded == {"n": 3, "b": True, "a": [0, 1, 2]}


def test_cache_hits_and_misses(tmp_path, ring):
    cache = ClassificationCache(tmp_path / "cache")
    record = classify(RingProfile(ring("Z(12)")))
    assert cache.get(record.ring_hash) is None
    cache.put(record)
    assert cache.get(record.ring_hash) == record
    assert (cache.hits, cache.misses) == (1, 1)
    assert list((tmp_path / "cache").glob("*.tmp")) == []


def test_cache_ignores_other_versions(tmp_path, ring):
    record = classify(RingProfile(ring("Z(4)")))
    ClassificationCache(tmp_path, version="0").put(record)
    cache = ClassificationCache(tmp_path)
    assert cache.get(record.ring_hash) is None
    assert cache.misses == 1


def test_cache_ignores_unreadable_entries(tmp_path, ring):
    record = classify(RingProfile(ring("Z(4)")))
    cache = ClassificationCache(tmp_path)
    cache.path(record.ring_hash).write_text("{")
    assert cache.get(record.ring_hash) is None
    cache.path(record.ring_hash).write_text(json.dumps({"hash": record.ring_hash, "version": "1"}))
    assert cache.get(record.ring_hash) is None
