from dataclasses import dataclass, asdict
from functools import cached_property
from typing import Any, Sequence, Tuple

import numpy as np
from sympy import isprime


class FinringError(Exception):
    pass


class SizeCapExceeded(FinringError):
    def __init__(self, requested: int, cap: int):
        super().__init__(
            f"construction would have {requested} elements, above the size cap of {cap}"
        )
        self.requested = requested
        self.cap = cap


class NotPrime(FinringError):
    def __init__(self, value: int):
        super().__init__(f"{value} is not a prime")
        self.value = value


class InternalInconsistency(FinringError):
    pass


@dataclass(frozen=True)
class Limits(object):
    """Tunable bounds shared by constructors, predicates and the claim suite.

    Attributes:
        size_cap {int} -- Largest ring or group any constructor will allocate.
        expensive_order {int} -- Above this order, exchange, pi_regular and unit_regular are skipped.
        skip_expensive {bool} -- Skip the expensive predicates at every order.
        exhaustive_axiom_order {int} -- Up to this order every axiom triple is checked.
        axiom_samples {int} -- Number of sampled triples per axiom above exhaustive_axiom_order.
        local_order {int} -- Order bound for quotient, subring and oracle scans.
        corner_order {int} -- Order bound for corner ring scans.
    """

    size_cap: int = 4096
    expensive_order: int = 1024
    skip_expensive: bool = False
    exhaustive_axiom_order: int = 128
    axiom_samples: int = 65536
    local_order: int = 64
    corner_order: int = 256

    def allows_expensive(self, order: int) -> bool:
        return not self.skip_expensive and order <= self.expensive_order

    def encode_json(self) -> dict:
        return asdict(self)


DEFAULT_LIMITS = Limits()


def check_size(order: int, limits: Limits = DEFAULT_LIMITS) -> None:
    """Raises SizeCapExceeded when an object of the given order would exceed the cap.

    Arguments:
        order {int} -- Number of elements about to be allocated.

    Keyword Arguments:
        limits {Limits} -- The limits in effect (default: {DEFAULT_LIMITS})

    Raises:
        SizeCapExceeded: order is above limits.size_cap.
    """
    if order > limits.size_cap:
        raise SizeCapExceeded(order, limits.size_cap)


def require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(p)


def table_dtype(order: int) -> Any:
    return np.int16 if order <= np.iinfo(np.int16).max else np.int32


def frozen(table: np.ndarray) -> np.ndarray:
    table.setflags(write=False)
    return table


class MixedRadix(object):
    """Little-endian mixed-radix codec: digit d of an index carries the weight
    prod(radices[:d]).  Every constructor that builds elements out of tuples (products,
    matrices, group rings, trivial extensions) encodes them with this class.
    """

    def __init__(self, radices: Sequence[int]):
        self.radices: Tuple[int, ...] = tuple(int(r) for r in radices)
        strides = []
        weight = 1
        for radix in self.radices:
            strides.append(weight)
            weight *= radix
        self.strides: Tuple[int, ...] = tuple(strides)
        self.order: int = weight

    @cached_property
    def digits(self) -> np.ndarray:
        """The (order, len(radices)) matrix whose row i holds the digits of index i."""
        indices = np.arange(self.order, dtype=np.int64)
        columns = [
            (indices // stride) % radix
            for stride, radix in zip(self.strides, self.radices)
        ]
        if not columns:
            return np.zeros((self.order, 0), dtype=np.int64)
        return np.stack(columns, axis=1)

    def encode(self, digits: Sequence[int]) -> int:
        if len(digits) != len(self.radices):
            raise ValueError(
                f"expected {len(self.radices)} digits, got {len(digits)} instead"
            )
        return sum(int(d) * s for d, s in zip(digits, self.strides))

    def decode(self, index: int) -> Tuple[int, ...]:
        return tuple(
            (index // stride) % radix
            for stride, radix in zip(self.strides, self.radices)
        )

    def combine(self, columns: Sequence[np.ndarray]) -> np.ndarray:
        """Encodes arrays of digits elementwise; columns[d] holds digit d for every cell."""
        out = np.zeros(np.shape(columns[0]), dtype=np.int32)
        for column, stride in zip(columns, self.strides):
            out += np.asarray(column, dtype=np.int32) * stride
        return out.astype(table_dtype(self.order))
