import logging
from typing import Dict, Union

from finring.constructions import (
    corner,
    direct_product,
    group_ring,
    ideal_generated,
    matrix_ring,
    quotient,
    ring_gf,
    ring_zn,
    trivial_extension,
    upper_triangular,
)
from finring.exprlang.errors import EvaluationError, ExpressionError
from finring.exprlang.syntax import ExprNode, NodeKind, parse, print_expr
from finring.groups import FiniteGroup, cyclic_group, group_product, symmetric_group_3
from finring.rings import FiniteRing
from finring.util import DEFAULT_LIMITS, FinringError, Limits


logger = logging.getLogger(__name__)

Built = Union[FiniteRing, FiniteGroup]


class Evaluator(object):
    """Builds the ring or group an expression names.  Results are memoised by canonical text and
    labelled with it, so equal texts give the same object."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits
        self.__built: Dict[str, Built] = {}

    def evaluate(self, expr: Union[str, ExprNode]) -> Built:
        node = parse(expr) if isinstance(expr, str) else expr
        text = print_expr(node)
        if text not in self.__built:
            self.__built[text] = self.__build(node, text)
        return self.__built[text]

    def ring(self, expr: Union[str, ExprNode]) -> FiniteRing:
        built = self.evaluate(expr)
        if not isinstance(built, FiniteRing):
            node = parse(expr) if isinstance(expr, str) else expr
            raise EvaluationError(print_expr(node), node.span, "this names a group, not a ring")
        return built

    def group(self, expr: Union[str, ExprNode]) -> FiniteGroup:
        built = self.evaluate(expr)
        if not isinstance(built, FiniteGroup):
            node = parse(expr) if isinstance(expr, str) else expr
            raise EvaluationError(print_expr(node), node.span, "this names a ring, not a group")
        return built

    def __build(self, node: ExprNode, text: str) -> Built:
        children = [self.evaluate(child) for child in node.children()]
        try:
            built = self.__construct(node, children)
        except ExpressionError:
            raise
        except (FinringError, ValueError) as ex:
            logger.info("could not build %s: %s", text, ex)
            raise EvaluationError(text, node.span, str(ex)) from ex
        logger.debug("built %s", text)
        return built.relabel(text)

    def __construct(self, node: ExprNode, children: list) -> Built:
        args = node.args
        limits = self.limits
        kind = node.kind
        if kind is NodeKind.Z:
            return ring_zn(int(args[0]), limits)  # type: ignore
        if kind is NodeKind.GF:
            return ring_gf(int(args[0]), int(args[1]), limits)  # type: ignore
        if kind is NodeKind.M:
            return matrix_ring(children[0], int(args[0]), limits)  # type: ignore
        if kind is NodeKind.T:
            return upper_triangular(children[0], int(args[0]), limits)  # type: ignore
        if kind is NodeKind.PROD:
            return direct_product(children, limits)[0]
        if kind is NodeKind.TRIV_EXT:
            return trivial_extension(children[0], limits)
        if kind is NodeKind.QUOT:
            ring = children[0]
            generators = args[1]
            for g in generators:  # type: ignore
                ring.element(g)
            return quotient(ring, ideal_generated(ring, generators), limits)[0]  # type: ignore
        if kind is NodeKind.CORNER:
            return corner(children[0], int(args[1]), limits)  # type: ignore
        if kind is NodeKind.GR:
            return group_ring(children[0], children[1], limits)
        if kind is NodeKind.C:
            return cyclic_group(int(args[0]), limits)  # type: ignore
        if kind is NodeKind.GPROD:
            group = children[0]
            for other in children[1:]:
                group = group_product(group, other, limits)
            return group
        if kind is NodeKind.S3:
            return symmetric_group_3(limits)
        raise RuntimeError(f"no constructor for {kind}; this should never happen, file a bug.")


def evaluate(expr: Union[str, ExprNode], limits: Limits = DEFAULT_LIMITS) -> Built:
    """One-shot evaluation without a shared memo."""
    return Evaluator(limits).evaluate(expr)
