from collections import Counter
from functools import cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookseries.partitions import (
    Partition,
    count_t_cores,
    enumerate_partitions,
    hook_lengths,
    hook_lengths_mod_t,
    is_t_core,
    syt_count,
)
from hookseries.series import euler_product_power


def naive_hooks(p):
    """Cell-by-cell scanner: arm + leg + 1, counted box by box."""
    hooks = Counter()
    for i, row in enumerate(p.parts):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for below in p.parts[i + 1 :] if below > j)
            hooks[arm + leg + 1] += 1
    return hooks


@cache
def partition_count(n, cap=None):
    """Independent counting recurrence (no shared code with the generator)."""
    if cap is None:
        cap = n
    if n == 0:
        return 1
    return sum(partition_count(n - first, min(first, n - first)) for first in range(1, cap + 1))


def brute_force_syt(p):
    """Count standard fillings by extending row by row."""
    total = p.size
    counts = 0

    def place(value, row_fill):
        nonlocal counts
        if value > total:
            counts += 1
            return
        for i, part in enumerate(p.parts):
            if row_fill[i] < part and (i == 0 or row_fill[i - 1] > row_fill[i]):
                row_fill[i] += 1
                place(value + 1, row_fill)
                row_fill[i] -= 1

    place(1, [0] * len(p.parts))
    return counts


partitions_strategy = st.lists(st.integers(1, 9), max_size=8).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


class TestPartitionType:
    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((3, 5))

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            Partition((3, 0))
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_empty_partition(self):
        p = Partition()
        assert p.size == 0 and len(p) == 0
        assert p.conjugate() == p

    def test_from_string(self):
        assert Partition.from_string("6,3,3,2") == Partition((6, 3, 3, 2))
        assert Partition.from_string("") == Partition()
        with pytest.raises(ValueError):
            Partition.from_string("1,2")

    @given(partitions_strategy)
    @settings(max_examples=60, derandomize=True)
    def test_conjugate_involution(self, p):
        assert p.conjugate().conjugate() == p
        assert p.conjugate().size == p.size


class TestEnumeration:
    def test_known_counts(self):
        assert len(list(enumerate_partitions(4))) == 5
        assert list(enumerate_partitions(0)) == [Partition()]
        assert len(list(enumerate_partitions(10))) == 42

    def test_reverse_lex_order(self):
        got = [p.parts for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_order_is_reverse_lexicographic(self):
        for n in range(9):
            parts = [p.parts for p in enumerate_partitions(n)]
            assert parts == sorted(parts, reverse=True)

    def test_no_duplicates_and_sizes(self):
        for n in range(12):
            seen = list(enumerate_partitions(n))
            assert len(seen) == len(set(seen))
            assert all(p.size == n for p in seen)

    def test_counts_against_recurrence_and_series(self):
        gf = euler_product_power(-1, 15)
        for n in range(16):
            count = len(list(enumerate_partitions(n)))
            assert count == partition_count(n)
            assert gf.coefficient(n).constant_value() == count

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(-1))


class TestHookLengths:
    def test_worked_example(self):
        hooks = hook_lengths(Partition((6, 3, 3, 2)))
        assert hooks == Counter([2, 1, 4, 3, 1, 5, 4, 2, 9, 8, 6, 3, 2, 1])

    def test_staircase(self):
        hooks = hook_lengths(Partition((4, 3, 2, 1)))
        assert hooks == Counter([1, 1, 1, 1, 3, 3, 3, 5, 5, 7])

    def test_empty(self):
        assert hook_lengths(Partition()) == Counter()

    def test_matches_naive_scanner(self):
        for n in range(11):
            for p in enumerate_partitions(n):
                assert hook_lengths(p) == naive_hooks(p)

    def test_total_multiplicity_is_size(self):
        for n in range(21):
            for p in enumerate_partitions(n):
                assert sum(hook_lengths(p).values()) == n

    def test_transpose_symmetry(self):
        for n in range(15):
            for p in enumerate_partitions(n):
                assert hook_lengths(p) == hook_lengths(p.conjugate())

    def test_corner_box(self):
        for n in range(1, 13):
            for p in enumerate_partitions(n):
                assert hook_lengths(p)[1] >= 1


class TestHookLengthsModT:
    def test_worked_example(self):
        hooks = hook_lengths_mod_t(Partition((6, 3, 3, 2)), 2)
        assert hooks == Counter([2, 4, 4, 2, 8, 6, 2])

    def test_t_one_keeps_everything(self):
        for n in range(10):
            for p in enumerate_partitions(n):
                assert hook_lengths_mod_t(p, 1) == hook_lengths(p)

    def test_square_mod_three(self):
        assert hook_lengths_mod_t(Partition((2, 2)), 3) == Counter([3, 3])

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            hook_lengths_mod_t(Partition((1,)), 0)


class TestTCore:
    def test_known_cores(self):
        assert is_t_core(Partition((14, 10, 6, 6, 4, 4, 4, 2, 2, 2)), 5)
        assert is_t_core(Partition(), 3)
        assert is_t_core(Partition((2, 1)), 2)
        assert not is_t_core(Partition((2,)), 2)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            is_t_core(Partition((1,)), 0)

    def test_three_criteria_agree(self):
        # no hook divisible by t == t absent == filtered multiset empty
        for n in range(17):
            for p in enumerate_partitions(n):
                hooks = hook_lengths(p)
                for t in range(1, 8):
                    divisible_free = all(h % t for h in hooks)
                    assert is_t_core(p, t) == divisible_free
                    assert divisible_free == (hooks[t] == 0)
                    assert divisible_free == (not hook_lengths_mod_t(p, t))


class TestSytCount:
    def test_small_shape(self):
        assert syt_count(Partition((2, 1))) == 2

    def test_single_row_and_column(self):
        for n in range(1, 8):
            assert syt_count(Partition((n,))) == 1
            assert syt_count(Partition((1,) * n)) == 1

    def test_against_brute_force(self):
        for n in range(7):
            for p in enumerate_partitions(n):
                assert syt_count(p) == brute_force_syt(p)

    def test_square_sum_is_factorial(self):
        from math import factorial

        for n in range(1, 11):
            assert sum(syt_count(p) ** 2 for p in enumerate_partitions(n)) == factorial(n)


class TestCountTCores:
    def test_zero_weight(self):
        for t in (1, 2, 3, 7):
            assert count_t_cores(0, t) == 1

    def test_two_cores_are_staircases(self):
        triangular = {k * (k + 1) // 2 for k in range(10)}
        for m in range(16):
            assert count_t_cores(m, 2) == (1 if m in triangular else 0)

    def test_non_triangular(self):
        assert count_t_cores(4, 2) == 0

    def test_example_core_weight(self):
        p = Partition((14, 10, 6, 6, 4, 4, 4, 2, 2, 2))
        assert p.size == 54 and is_t_core(p, 5)

    def test_generating_function_cross_check(self):
        degree = 25
        for t in (2, 3, 4, 5):
            gf = euler_product_power(t, degree, step=t) * euler_product_power(-1, degree)
            for m in range(degree + 1):
                assert gf.coefficient(m).constant_value() == count_t_cores(m, t)
