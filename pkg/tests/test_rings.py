import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from finring.constructions import ring_zn
from finring.rings import (
    AxiomKind,
    AxiomViolation,
    ElementOp,
    ElemSet,
    ForeignElement,
    characteristic,
    elem_op,
    is_commutative,
    power,
    power_index,
    power_vector,
    validate_ring,
)
from finring.util import Limits, SizeCapExceeded

Z2_MUL = [[0, 0], [0, 1]]
Z3_ADD = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
Z3_MUL = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]


def test_validates_z3():
    ring = validate_ring(3, Z3_ADD, Z3_MUL, 0, 1, "Z(3)")
    assert ring.order == 3
    assert ring.minus_one == 2
    assert ring.neg.tolist() == [0, 2, 1]
    assert ring.multiple_of_one(2) == 2


def test_same_tables_same_digest():
    first = validate_ring(3, Z3_ADD, Z3_MUL, 0, 1, "one")
    second = validate_ring(3, np.array(Z3_ADD), np.array(Z3_MUL), 0, 1, "other")
    assert first.digest == second.digest
    assert first == second
    assert first.relabel("again").digest == first.digest


def test_tables_are_frozen():
    ring = validate_ring(3, Z3_ADD, Z3_MUL, 0, 1)
    with pytest.raises(ValueError):
        ring.add[0, 0] = 1


def test_noncommutative_addition():
    with pytest.raises(AxiomViolation) as ex:
        validate_ring(2, [[0, 1], [0, 0]], Z2_MUL, 0, 1)
    assert ex.value.kind is AxiomKind.ADD_COMMUTATIVE
    assert ex.value.witness == (0, 1)


def test_one_equal_to_zero_needs_the_zero_ring():
    with pytest.raises(AxiomViolation) as ex:
        validate_ring(2, [[0, 1], [1, 0]], Z2_MUL, 0, 0)
    assert ex.value.kind is AxiomKind.MUL_IDENTITY
    zero_ring = validate_ring(1, [[0]], [[0]], 0, 0)
    assert characteristic(zero_ring) == 1


def test_out_of_range_entry():
    with pytest.raises(AxiomViolation) as ex:
        validate_ring(2, [[0, 1], [1, 2]], Z2_MUL, 0, 1)
    assert ex.value.kind is AxiomKind.TABLE_SHAPE


def test_reports_the_least_distributivity_failure():
    broken = [row[:] for row in Z3_MUL]
    broken[2][2] = 2
    with pytest.raises(AxiomViolation) as ex:
        validate_ring(3, Z3_ADD, broken, 0, 1)
    assert ex.value.kind is AxiomKind.LEFT_DISTRIBUTIVE
    assert ex.value.witness == (2, 1, 1)


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        validate_ring(3, Z3_ADD, Z3_MUL, 0, 1, limits=Limits(size_cap=2))


def test_sampled_axioms_above_the_exhaustive_bound():
    ring = ring_zn(12, Limits(exhaustive_axiom_order=4, axiom_samples=500))
    assert ring.order == 12


def test_element_operations():
    ring = ring_zn(5)
    two, three = ring.element(2), ring.element(3)
    assert elem_op(ring, ElementOp.ADD, two, three).index == 0
    assert elem_op(ring, "mul", two, three).index == 1
    assert elem_op(ring, ElementOp.SUB, two, three).index == 4
    assert elem_op(ring, ElementOp.NEG, two).index == 3
    assert power(ring, two, 4).index == 1


def test_foreign_elements_are_rejected():
    z5, z7 = ring_zn(5), ring_zn(7)
    with pytest.raises(ForeignElement):
        elem_op(z5, ElementOp.ADD, z5.element(1), z7.element(1))
    with pytest.raises(ForeignElement):
        z5.element(5)


def test_elem_set():
    ring = ring_zn(6)
    members = ElemSet(ring.digest, [4, 0, 4, 2])
    assert members.members == (0, 2, 4)
    assert 2 in members
    assert ring.element(2) in members
    assert ring_zn(7).element(2) not in members
    assert members.mask(6).tolist() == [True, False, True, False, True, False]


def test_characteristic_and_commutativity():
    assert characteristic(ring_zn(6)) == 6
    assert is_commutative(ring_zn(6))


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=40))
def test_power_laws_in_zn(n, k):
    ring = ring_zn(n)
    for a in range(n):
        assert power_index(ring, a, k) == pow(a, k, n) % n
    assert power_vector(ring, k).tolist() == [pow(a, k, n) % n for a in range(n)]


def test_negative_exponents():
    with pytest.raises(ValueError):
        power_index(ring_zn(3), 2, -1)
