import pytest
from hypothesis import given
from hypothesis import strategies as st

from finring.constructions import NotIdempotent
from finring.exprlang import (
    ArityError,
    EvaluationError,
    Evaluator,
    NodeKind,
    ParseError,
    UnknownName,
    canonical,
    evaluate,
    node,
    parse,
    print_expr,
)
from finring.groups import FiniteGroup
from finring.util import Limits, NotPrime, SizeCapExceeded


@pytest.mark.parametrize(
    "text, expected",
    [
        (" z( 6 ) ", "Z(6)"),
        ("prod(z(2), z(3))", "Prod(Z(2),Z(3))"),
        ("gr(Z(3),c(3))", "GR(Z(3),C(3))"),
        ("quot( Z(8) , [ 2 , 4 ] )", "Quot(Z(8),[2,4])"),
        ("trivext(gf(2,2))", "TrivExt(GF(2,2))"),
        ("s3", "S3"),
        ("GR(Z(2),Prod(C(2),C(2)))", "GR(Z(2),Prod(C(2),C(2)))"),
    ],
)
def test_canonical_text(text, expected):
    assert canonical(text) == expected


def test_products_of_groups_are_group_products():
    assert parse("Prod(C(2),C(3))").kind is NodeKind.GPROD
    assert parse("Prod(C(2),C(3))").sort == "group"
    assert parse("Prod(Z(2),Z(3))").sort == "ring"


def test_unclosed_parenthesis():
    with pytest.raises(ParseError) as ex:
        parse("Z(6")
    assert ex.value.position == 3
    assert ex.value.expected == frozenset({")"})


def test_stray_character():
    with pytest.raises(ParseError) as ex:
        parse("Z(6)$")
    assert ex.value.position == 4


def test_trailing_input():
    with pytest.raises(ParseError) as ex:
        parse("Z(6) Z(2)")
    assert ex.value.position == 5


def test_unknown_name():
    with pytest.raises(UnknownName) as ex:
        parse("Foo(1)")
    assert ex.value.name == "Foo"
    assert ex.value.position == 0


@pytest.mark.parametrize(
    "text",
    ["Z(2,3)", "M(Z(2),2)", "GR(Z(2),Z(3))", "Prod(Z(2),C(2))", "Prod(Z(2))", "Corner(Z(6))"],
)
def test_arity_and_sort_errors(text):
    with pytest.raises(ArityError):
        parse(text)


def test_nodes_built_in_code_are_checked_too():
    assert print_expr(node(NodeKind.M, 2, node(NodeKind.Z, 3))) == "M(2,Z(3))"
    with pytest.raises(ArityError):
        node(NodeKind.GR, node(NodeKind.Z, 2), node(NodeKind.Z, 2))


def test_evaluation_labels_and_memoises():
    evaluator = Evaluator()
    quotient = evaluator.ring("quot(Z(6), [2])")
    assert quotient.order == 2
    assert quotient.label == "Quot(Z(6),[2])"
    assert evaluator.ring("Quot(Z(6),[2])") is quotient


def test_groups_evaluate_to_groups():
    group = evaluate("Prod(C(2),C(2))")
    assert isinstance(group, FiniteGroup)
    assert group.order == 4
    with pytest.raises(EvaluationError):
        Evaluator().ring("C(3)")
    with pytest.raises(EvaluationError):
        Evaluator().group("Z(3)")


def test_constructor_errors_are_chained():
    with pytest.raises(EvaluationError) as ex:
        evaluate("Corner(Z(6),2)")
    assert isinstance(ex.value.__cause__, NotIdempotent)
    assert ex.value.text == "Corner(Z(6),2)"

    with pytest.raises(EvaluationError) as ex:
        evaluate("GF(4,1)")
    assert isinstance(ex.value.__cause__, NotPrime)

    with pytest.raises(EvaluationError) as ex:
        evaluate("M(3,Z(4))", Limits(size_cap=4096))
    assert isinstance(ex.value.__cause__, SizeCapExceeded)


def test_elements_outside_the_child_ring():
    with pytest.raises(EvaluationError):
        evaluate("Quot(Z(6),[9])")


sizes = st.integers(min_value=1, max_value=12)
groups = st.recursive(
    st.builds(lambda m: node(NodeKind.C, m), sizes) | st.just(node(NodeKind.S3)),
    lambda children: st.lists(children, min_size=2, max_size=3).map(
        lambda members: node(NodeKind.PROD, *members)
    ),
    max_leaves=4,
)
element_lists = st.lists(st.integers(min_value=0, max_value=20), max_size=3).map(tuple)
rings = st.recursive(
    st.builds(lambda n: node(NodeKind.Z, n), sizes)
    | st.builds(lambda p, k: node(NodeKind.GF, p, k), sizes, sizes),
    lambda children: st.one_of(
        st.builds(lambda k, r: node(NodeKind.M, k, r), sizes, children),
        st.builds(lambda k, r: node(NodeKind.T, k, r), sizes, children),
        st.builds(lambda r: node(NodeKind.TRIV_EXT, r), children),
        st.builds(lambda r, gens: node(NodeKind.QUOT, r, gens), children, element_lists),
        st.builds(lambda r, e: node(NodeKind.CORNER, r, e), children, sizes),
        st.builds(lambda r, g: node(NodeKind.GR, r, g), children, groups),
        st.lists(children, min_size=2, max_size=3).map(lambda rs: node(NodeKind.PROD, *rs)),
    ),
    max_leaves=6,
)


@given(rings)
def test_printing_is_a_fixed_point_of_parsing(expr):
    text = print_expr(expr)
    assert parse(text) == expr
    assert canonical(text) == text
