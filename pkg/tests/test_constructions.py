import pytest

from finring.constructions import (
    GroupRingProvenance,
    Ideal,
    NoPolynomialShipped,
    NotAGroupRing,
    NotAnIdeal,
    NotIdempotent,
    ProductProvenance,
    ZeroCorner,
    augmentation,
    corner,
    direct_product,
    group_ring,
    ideal_generated,
    matrix_index,
    matrix_ring,
    quotient,
    ring_gf,
    ring_zn,
    subring_generated,
    trivial_extension,
    upper_triangular,
)
from finring.groups import cyclic_group, symmetric_group_3
from finring.radicals import units
from finring.rings import is_commutative
from finring.util import Limits, NotPrime, SizeCapExceeded


def test_zn():
    ring = ring_zn(6)
    assert ring.order == 6
    assert ring.label == "Z(6)"
    assert int(ring.mul[4, 5]) == 2
    assert ring_zn(1).order == 1


def test_prime_field_has_the_tables_of_zp():
    assert ring_gf(3, 1).digest == ring_zn(3).digest


def test_extension_fields_are_fields():
    for p, k in ((2, 2), (2, 3), (3, 2)):
        field = ring_gf(p, k)
        assert field.order == p**k
        assert len(units(field)) == field.order - 1
        assert is_commutative(field)


def test_gf_rejects_bad_parameters():
    with pytest.raises(NotPrime):
        ring_gf(4, 1)
    with pytest.raises(NoPolynomialShipped):
        ring_gf(2, 7)


def test_direct_product():
    product, projections = direct_product([ring_zn(2), ring_zn(3)])
    assert product.order == 6
    assert product.one == 3
    assert isinstance(product.provenance, ProductProvenance)
    assert [p.target.order for p in projections] == [2, 3]
    assert all(p.is_surjective() for p in projections)


def test_matrix_ring_encoding():
    z2 = ring_zn(2)
    m2 = matrix_ring(z2, 2)
    assert m2.order == 16
    assert not is_commutative(m2)
    assert matrix_index(z2, 2, [[1, 0], [0, 1]]) == 9 == m2.one
    assert matrix_index(z2, 2, [[0, 1], [1, 1]]) == 14
    assert len(units(m2)) == 6


def test_matrix_ring_size_cap():
    with pytest.raises(SizeCapExceeded):
        matrix_ring(ring_zn(4), 3, Limits(size_cap=4096))


def test_upper_triangular():
    ring = upper_triangular(ring_zn(2), 2)
    assert ring.order == 8
    assert ring.one == 5
    assert int(ring.mul[2, 2]) == 0


def test_trivial_extension():
    ring = trivial_extension(ring_zn(3))
    assert ring.order == 9
    # (0, 1) squares to zero
    assert int(ring.mul[3, 3]) == 0
    assert is_commutative(ring)


def test_quotient_by_a_generated_ideal():
    z6 = ring_zn(6)
    ideal = ideal_generated(z6, [2])
    assert ideal.members.members == (0, 2, 4)
    image, projection = quotient(z6, ideal)
    assert image.order == 2
    assert projection.kernel().members.members == (0, 2, 4)
    assert projection.is_surjective()


def test_quotient_rejects_subsets_that_are_not_ideals():
    with pytest.raises(NotAnIdeal):
        quotient(ring_zn(6), [0, 2])
    with pytest.raises(NotAnIdeal):
        Ideal.of(ring_zn(6), [1, 2])


def test_corners():
    z6 = ring_zn(6)
    assert corner(z6, 3).order == 2
    assert corner(z6, 4).order == 3
    with pytest.raises(NotIdempotent):
        corner(z6, 2)
    with pytest.raises(ZeroCorner):
        corner(z6, 0)


def test_generated_subring():
    m2 = matrix_ring(ring_zn(2), 2)
    # [[0,1],[1,1]] generates a copy of GF(4)
    subring = subring_generated(m2, [14])
    assert subring.order == 4
    assert len(units(subring)) == 3


def test_group_ring_and_augmentation():
    ring = group_ring(ring_zn(3), cyclic_group(3))
    assert ring.order == 27
    assert isinstance(ring.provenance, GroupRingProvenance)
    epsilon, kernel = augmentation(ring)
    assert epsilon.is_surjective()
    assert len(kernel) == 9


def test_group_ring_over_the_trivial_group_keeps_the_tables():
    assert group_ring(ring_zn(4), cyclic_group(1)).digest == ring_zn(4).digest


def test_noncommutative_group_ring():
    assert not is_commutative(group_ring(ring_zn(2), symmetric_group_3()))


def test_augmentation_needs_a_group_ring():
    with pytest.raises(NotAGroupRing):
        augmentation(ring_zn(4))


def test_group_rings_above_the_size_cap():
    with pytest.raises(SizeCapExceeded):
        group_ring(ring_zn(4), cyclic_group(4), Limits(size_cap=255))
    assert group_ring(ring_zn(4), cyclic_group(4), Limits(size_cap=256)).order == 256
