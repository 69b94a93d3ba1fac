import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primefactors, totient

from finring.constructions import ring_zn
from finring.radicals import (
    ProfileStore,
    RingProfile,
    element_sets,
    idempotents_lift,
    jacobson_by_maximal_ideals,
    jacobson_radical,
    maximal_ideals,
    prime_radical,
    sqrt_jacobson,
    units,
)


def members(mask: np.ndarray) -> list:
    return np.flatnonzero(mask).tolist()


def test_jacobson_of_z9(ring):
    z9 = ring("Z(9)")
    assert jacobson_radical(z9).members.members == (0, 3, 6)
    assert sqrt_jacobson(z9).members == (0, 3, 6)


def test_idempotents_nilpotents_and_center_of_z6(ring):
    idempotents, nilpotents, center = element_sets(ring("Z(6)"))
    assert idempotents.members == (0, 1, 3, 4)
    assert nilpotents.members == (0,)
    assert len(center) == 6


def test_jacobson_of_upper_triangular(ring):
    profile = RingProfile(ring("T(2,Z(2))"))
    assert members(profile.jacobson) == [0, 2]
    assert len(profile.unit_group) == 2


def test_units_of_the_2x2_matrices_over_z2(ring):
    profile = RingProfile(ring("M(2,Z(2))"))
    assert len(profile.unit_group) == 6
    assert members(profile.jacobson) == [0]
    assert members(profile.nilpotents) == members(profile.sqrt_jacobson)


def test_sqrt_jacobson_is_not_closed_under_addition(ring):
    m2 = ring("M(2,Z(2))")
    roots = RingProfile(m2).sqrt_jacobson
    # [[0,1],[0,0]] and [[0,0],[1,0]] are nilpotent, their sum is a unit
    assert roots[2] and roots[4]
    assert int(m2.add[2, 4]) == 6
    assert not roots[6]


def test_units_of_the_group_ring_z3c3(ring):
    profile = RingProfile(ring("GR(Z(3),C(3))"))
    assert len(profile.unit_group) == 18
    assert int(profile.jacobson.sum()) == 9


def test_unit_inverses(ring):
    group = units(ring("Z(7)"))
    assert group.inverse(3) == 5
    with pytest.raises(ValueError):
        group.inverse(0)


def test_prime_radical(ring):
    assert prime_radical(ring("Z(4)")).members.members == (0, 2)
    assert prime_radical(ring("Z(6)")).members.members == (0,)


def test_maximal_ideals_of_z12(ring):
    z12 = ring("Z(12)")
    found = sorted(ideal.members.members for ideal in maximal_ideals(z12))
    assert found == [(0, 2, 4, 6, 8, 10), (0, 3, 6, 9)]
    assert jacobson_by_maximal_ideals(z12) == jacobson_radical(z12)


def test_radical_quotient_and_lifting(ring):
    z9 = ring("Z(9)")
    profile = RingProfile(z9)
    residue, projection = profile.radical_quotient
    assert residue.order == 3
    assert projection.is_surjective()
    assert profile.idempotents_lift_mod_jacobson
    assert idempotents_lift(z9, profile.jacobson_ideal)


def test_profile_store_shares_profiles_by_digest(ring):
    store = ProfileStore()
    z6 = ring("Z(6)")
    assert store.profile(z6) is store.profile(z6.relabel("another name"))
    assert len(store) == 1


@given(st.integers(min_value=2, max_value=60))
def test_jacobson_and_units_of_zn(n):
    ring = ring_zn(n)
    radical = int(np.prod(primefactors(n)))
    profile = RingProfile(ring)
    assert members(profile.jacobson) == list(range(0, n, radical))
    assert len(profile.unit_group) == totient(n)
    assert (profile.sqrt_jacobson == profile.jacobson).all()


@pytest.mark.parametrize(
    "expression",
    [
        "Z(12)",
        "Z(16)",
        "GR(Z(3),C(3))",
        "GR(Z(2),S3)",
        "TrivExt(Z(4))",
        "T(2,Z(4))",
        "M(2,Z(2))",
        "Quot(Z(8),[4])",
        "Prod(Z(4),Z(9))",
    ],
)
def test_longer_power_scans_find_nothing_new(ring, expression):
    r = ring(expression)
    assert sqrt_jacobson(r) == sqrt_jacobson(r, max_exponent=2 * r.order)
