import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from finring.util import (
    Limits,
    MixedRadix,
    NotPrime,
    SizeCapExceeded,
    check_size,
    require_prime,
)


def test_mixed_radix_is_little_endian():
    radix = MixedRadix([2, 3])
    assert radix.order == 6
    assert radix.strides == (1, 2)
    assert radix.encode([1, 2]) == 5
    assert radix.decode(5) == (1, 2)


def test_mixed_radix_digit_matrix():
    radix = MixedRadix([2, 3])
    assert radix.digits.shape == (6, 2)
    assert radix.digits[5].tolist() == [1, 2]
    assert radix.digits[:, 0].tolist() == [0, 1, 0, 1, 0, 1]


def test_mixed_radix_rejects_wrong_digit_count():
    with pytest.raises(ValueError):
        MixedRadix([2, 3]).encode([1])


@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4), st.data())
def test_mixed_radix_combine_agrees_with_encode(radices, data):
    radix = MixedRadix(radices)
    index = data.draw(st.integers(min_value=0, max_value=radix.order - 1))
    digits = radix.decode(index)
    columns = [np.array([d]) for d in digits]
    assert int(radix.combine(columns)[0]) == index


def test_check_size_raises_above_the_cap():
    with pytest.raises(SizeCapExceeded) as ex:
        check_size(5, Limits(size_cap=4))
    assert ex.value.requested == 5
    assert ex.value.cap == 4
    check_size(4, Limits(size_cap=4))


def test_expensive_predicates_follow_the_limits():
    assert Limits(expensive_order=10).allows_expensive(10)
    assert not Limits(expensive_order=10).allows_expensive(11)
    assert not Limits(skip_expensive=True).allows_expensive(2)


def test_require_prime():
    require_prime(7)
    with pytest.raises(NotPrime):
        require_prime(4)

