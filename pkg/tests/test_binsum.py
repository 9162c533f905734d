import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fibsums.binsum import SumSpec, _a_sum, a_row, a_sum, cyclic_walks, strip_paths, support
from fibsums.fibpoly import fib


def spec(k, m, l, z):
    return SumSpec.of(k, m, l, z)


def ints(row):
    return [int(v) for v in row]


def fibonacci(n):
    return fib(n).evaluate({"x": 1, "s": 1})


def test_fibonacci_identities_prefix():
    assert ints(a_row(spec(2, 5, 2, -1), 9)) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert ints(a_row(spec(2, 5, 0, -1), 9)) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_fibonacci_identities_to_40():
    for n in range(41):
        assert a_sum(n, spec(2, 5, 2, -1)) == fibonacci(n)
        assert a_sum(n, spec(2, 5, 0, -1)) == fibonacci(n + 1)


@pytest.mark.parametrize("m, z, expected", [
    (4, -1, [1, 1, 2, 2, 4, 4, 8, 8]),
    (6, 1, [1, 1, 2, 3, 6, 11, 22, 43, 86, 171, 342, 683]),
    (9, -1, [1, 1, 2, 3, 6, 10, 20, 35, 69, 124, 241, 440, 846]),
    (3, 1, [1, 1, 3, 5, 11, 21, 43, 85]),
])
def test_a_row_tables(m, z, expected):
    assert ints(a_row(spec(2, m, 0, z), len(expected) - 1)) == expected


def test_k3_reference_rows_from_index_one():
    # The reference k=3 rows start at n = 1; A_0 itself is 0 for m = 2 and 1 for m = 5.
    row2 = ints(a_row(spec(3, 2, 0, -1), 9))
    assert row2[1:] == [1, -2, 2, 0, -4, 8, -8, 0, 16]
    assert row2[0] == 0
    row5 = ints(a_row(spec(3, 5, 0, -1), 10))
    assert row5[1:] == [1, 0, 0, 1, -5, 0, 5, -30, 25, 25]
    assert row5[0] == 1


def test_empty_support_gives_zero():
    sp = spec(1, 5, 3, 1)
    lo, hi = support(0, sp)
    assert lo > hi
    assert a_sum(0, sp) == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 9), st.integers(-12, 12),
       st.sampled_from([Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 3)]),
       st.integers(0, 30))
def test_widening_support_changes_nothing(k, m, l, z, n):
    sp = spec(k, m, l, z)
    assert _a_sum(n, sp, widen=3) == a_sum(n, sp)


def test_integer_results_for_unit_z():
    for k, m, l, z in itertools.product((1, 2, 3), (1, 4, 7), (-2, 0, 5), (1, -1)):
        for n in range(20):
            assert a_sum(n, spec(k, m, l, z)).denominator == 1


def test_non_unit_integer_z_can_be_fractional():
    # negative h occurs in the support, so z = 2 contributes 2^(-h)
    assert a_sum(1, spec(2, 1, 0, 2)).denominator != 1


def test_zero_z_rejected():
    with pytest.raises(ValueError):
        spec(2, 5, 0, 0)


def _brute_strip(n, m):
    lo, hi = -((m - 1) // 2), (m - 2) // 2
    ups, downs = n // 2, (n + 1) // 2
    count = 0
    for steps in itertools.product((1, -1), repeat=n):
        if steps.count(1) != ups:
            continue
        y, ok = 0, True
        for d in steps:
            y += d
            if not lo <= y <= hi:
                ok = False
                break
        count += ok
    assert downs == n - ups
    return count


def test_strip_paths_brute_force():
    for m in range(3, 8):
        for n in range(0, 13):
            assert strip_paths(n, m) == _brute_strip(n, m)


def test_strip_paths_examples():
    assert [strip_paths(n, 3) for n in range(11)] == [1] * 11
    assert [strip_paths(n, 5) for n in range(10)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert [strip_paths(n, 7) for n in range(11)] == [1, 1, 2, 3, 6, 10, 19, 33, 61, 108, 197]


def test_strip_paths_equal_binomial_sums():
    for m in range(3, 10):
        for n in range(21):
            assert strip_paths(n, m) == a_sum(n, spec(2, m, 0, -1))


def _brute_walks(length, nodes, closed):
    target = 0 if closed else 1
    return sum(1 for steps in itertools.product((1, -1), repeat=length)
               if sum(steps) % nodes == target)


def test_cyclic_walks_brute_force():
    assert cyclic_walks(0, 6) == 1
    for nodes in (2, 3, 4, 6, 8):
        for length in range(0, 11):
            assert cyclic_walks(length, nodes, True) == _brute_walks(length, nodes, True)
            assert cyclic_walks(length, nodes, False) == _brute_walks(length, nodes, False)


def test_cyclic_walks_and_doubling():
    for m in range(1, 6):
        sp = spec(2, 2 * m, 0, 1)
        for n in range(16):
            assert cyclic_walks(2 * n, 2 * m, closed=True) == a_sum(2 * n, sp)
            assert cyclic_walks(2 * n + 1, 2 * m, closed=False) == a_sum(2 * n + 1, sp)
            assert a_sum(2 * n + 2, sp) == 2 * a_sum(2 * n + 1, sp)
