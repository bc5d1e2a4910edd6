import pytest

from knottunnels.bounds import (
    additive_iteration, cheapest_descent, fibonacci_upper, lower_bound, max_bridge,
    min_bridge_at_depth, semisimple_upper, torus_min_bridge_at_depth, upper_bound,
)
from knottunnels.corridor import depth, first_regular_index
from knottunnels.errors import InvalidInput, NotRegularError
from knottunnels.exactnum import fibonacci
from knottunnels.verify import all_sstrings

SAMPLE = "0011100011100"


def regular_strings(max_len):
    return [s for s in all_sstrings(max_len) if "1" in s]


def test_sample_iteration():
    it = additive_iteration(SAMPLE, 2, 2)
    assert it.m == 4
    assert it.sequence == (2, 2, 4, 6, 10, 14, 18, 22, 40, 62, 102, 142, 182)
    assert it.final == 182


@pytest.mark.parametrize("bits,a,b,expected", [
    (SAMPLE, 2, 2, 182), ("1", 2, 2, 4), ("10101", 2, 3, 29),
])
def test_lower_bound(bits, a, b, expected):
    assert lower_bound(bits, a, b) == expected


def test_iteration_errors():
    with pytest.raises(NotRegularError):
        additive_iteration("000", 2, 2)
    with pytest.raises(InvalidInput):
        additive_iteration("1", 0, 2)


@pytest.mark.parametrize("bits,expected", [(SAMPLE, 414), ("1", 5), ("10101", 29)])
def test_upper_bound(bits, expected):
    assert upper_bound(bits) == expected


def test_upper_sample_sequence():
    assert additive_iteration(SAMPLE, 4, 5).sequence == (4, 5, 9, 14, 23, 32, 41, 50, 91, 141, 232, 323, 414)


@pytest.mark.parametrize("args,expected", [
    ((2, 2, 8), [2, 2, 4, 6, 10, 14, 24]),
    ((2, 3, 8), [2, 3, 5, 7, 12, 17, 29]),
    ((1, 1, 4), [1, 1, 2]),
])
def test_cheapest_descent(args, expected):
    assert cheapest_descent(*args) == expected


def test_cheapest_descent_rejects():
    with pytest.raises(InvalidInput):
        cheapest_descent(3, 2, 8)
    with pytest.raises(InvalidInput):
        cheapest_descent(2, 2, 1)


def test_depth_recursions():
    assert [min_bridge_at_depth(d) for d in range(1, 6)] == [2, 4, 10, 24, 58]
    assert [torus_min_bridge_at_depth(d) for d in range(1, 6)] == [2, 5, 12, 29, 70]
    for d in range(1, 10):
        assert cheapest_descent(2, 2, 2 * d)[-1] == min_bridge_at_depth(d)
        assert cheapest_descent(2, 3, 2 * d)[-1] == torus_min_bridge_at_depth(d)
    with pytest.raises(InvalidInput):
        min_bridge_at_depth(0)


@pytest.mark.parametrize("n,m,expected", [(5, 2, 13), (3, 2, 5), (15, 4, 1076)])
def test_fibonacci_upper(n, m, expected):
    assert fibonacci_upper(n, m) == expected


@pytest.mark.parametrize("n,m", [(2, 2), (5, 1)])
def test_fibonacci_upper_rejects(n, m):
    with pytest.raises(InvalidInput):
        fibonacci_upper(n, m)


def test_max_and_semisimple():
    assert [max_bridge(n) for n in (1, 2, 5)] == [2, 3, 13]
    assert [semisimple_upper(m) for m in (1, 2, 10)] == [2, 3, 11]
    for n in range(3, 30):
        assert max_bridge(n) == fibonacci_upper(n, 2) == fibonacci(n + 2)


def test_iteration_linear_in_seeds():
    for bits in regular_strings(9):
        base = additive_iteration(bits, 2, 3).values
        doubled = additive_iteration(bits, 4, 6).values
        assert doubled == tuple(2 * v for v in base)


def test_universal_floor():
    for bits in regular_strings(12):
        assert lower_bound(bits, 2, 2) >= min_bridge_at_depth(depth(bits))


def test_bound_ordering():
    for bits in regular_strings(12):
        n, m = len(bits) + 1, first_regular_index(bits)
        assert lower_bound(bits, 2, 2) <= upper_bound(bits) <= fibonacci_upper(n + 1, m)
    for k in range(1, 13):
        assert upper_bound("1" * k) == fibonacci_upper(k + 2, 2)
