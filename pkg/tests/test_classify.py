import pytest

from finring.classify import (
    EXPENSIVE_VERDICTS,
    SKIPPED,
    VERDICT_NAMES,
    ClassificationRecord,
    UnknownPredicate,
    canonical_predicate,
    classify,
    lattice_violations,
)
from finring.radicals import RingProfile
from finring.util import Limits


def verdicts_of(ring, limits=Limits()):
    return classify(RingProfile(ring, limits), limits).verdicts


def test_z3_is_weak_but_not_strong(ring):
    verdicts = verdicts_of(ring("Z(3)"))
    assert verdicts.w_sqrt_ju is True
    assert verdicts.sqrt_ju is False
    assert verdicts.wuu is True
    assert verdicts.uu is False


def test_z2_is_strong(ring):
    verdicts = verdicts_of(ring("Z(2)"))
    assert verdicts.sqrt_ju is True
    assert verdicts.boolean is True


@pytest.mark.parametrize(
    "expression, expected",
    [
        ("GF(2,1)", True),
        ("GF(3,1)", True),
        ("GF(2,2)", False),
        ("GF(5,1)", False),
        ("GF(7,1)", False),
        ("GF(2,3)", False),
        ("GF(3,2)", False),
    ],
)
def test_fields_that_are_weakly_sqrt_ju(ring, expression, expected):
    assert verdicts_of(ring(expression)).w_sqrt_ju is expected


@pytest.mark.parametrize(
    "expression, expected",
    [
        ("GR(Z(2),C(2))", True),
        ("GR(Z(3),C(3))", True),
        ("GR(Z(3),C(2))", False),
        ("GR(Z(4),C(3))", False),
        ("GR(Z(9),C(3))", True),
    ],
)
def test_group_rings(ring, expression, expected):
    assert verdicts_of(ring(expression)).w_sqrt_ju is expected


def test_z4_is_pi_regular_but_not_regular(ring):
    verdicts = verdicts_of(ring("Z(4)"))
    assert verdicts.regular is False
    assert verdicts.pi_regular is True
    assert verdicts.local is True


def test_z3_is_weakly_nil_clean_but_not_nil_clean(ring):
    verdicts = verdicts_of(ring("Z(3)"))
    assert verdicts.weakly_nil_clean is True
    assert verdicts.nil_clean is False


def test_z6(ring):
    verdicts = verdicts_of(ring("Z(6)"))
    assert verdicts.weakly_boolean is True
    assert verdicts.boolean is False
    assert verdicts.w_sqrt_ju is True
    assert verdicts.local is False


def test_2x2_matrices_over_z2(ring):
    verdicts = verdicts_of(ring("M(2,Z(2))"))
    assert verdicts.w_sqrt_ju is False
    assert verdicts.dedekind_finite is True
    assert verdicts.clean is True
    assert verdicts.exchange is True
    assert verdicts.abelian is False
    assert verdicts.commutative is False


@pytest.mark.parametrize(
    "expression",
    ["Z(12)", "M(2,Z(2))", "T(2,Z(3))", "GR(Z(2),S3)", "TrivExt(Z(4))", "Prod(Z(2),Z(3),Z(4))"],
)
def test_the_implication_lattice_holds(ring, expression):
    assert lattice_violations(dict(verdicts_of(ring(expression)))) == []


def test_expensive_predicates_are_skipped(ring):
    limits = Limits(skip_expensive=True)
    record = classify(RingProfile(ring("Z(6)"), limits), limits)
    for name in EXPENSIVE_VERDICTS:
        assert record.verdicts[name] is None
        assert record.encode_json()[name] == SKIPPED
    assert record.verdicts.clean is True


def test_record_wire_form(ring):
    record = classify(RingProfile(ring("Z(4)")))
    encoded = record.encode_json()
    assert list(encoded) == ["hash"] + list(VERDICT_NAMES) + ["characteristic"]
    assert encoded["characteristic"] == 4
    assert ClassificationRecord.decode_json(encoded) == record
    assert record["Sqrt-JU"] == record.verdicts.sqrt_ju


def test_predicate_names():
    assert canonical_predicate("weakly_semi_boolean") == "weakly_j_clean"
    assert canonical_predicate("W-Sqrt-JU") == "w_sqrt_ju"
    with pytest.raises(UnknownPredicate) as ex:
        canonical_predicate("bogus")
    assert ex.value.name == "bogus"


def test_lattice_violations():
    assert lattice_violations({"uu": True, "wuu": False}) == [("uu", "wuu")]
    assert lattice_violations({"clean": True, "exchange": None}) == []


def test_verdicts_read_as_attributes(ring):
    verdicts = verdicts_of(ring("Z(2)"))
    assert list(verdicts) == list(VERDICT_NAMES)
    assert verdicts.boolean is verdicts["boolean"]
    with pytest.raises(AttributeError):
        verdicts.bogus
