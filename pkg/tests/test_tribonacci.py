"""Sequence engine: table, fast doubling, membership windows."""

import random

import pytest

from triboverify.tribonacci import (TribTable, default_table, index_window,
                                    is_tribonacci, trib, trib_fast)

FIRST = [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705,
         3136, 5768, 10609, 19513, 35890, 66012]


def test_first_values():
    for n, want in enumerate(FIRST):
        assert trib(n) == want


def test_recurrence_long():
    t = default_table()
    for n in range(3, 5000):
        assert t.value(n) == t.value(n - 1) + t.value(n - 2) + t.value(n - 3)


def test_fast_matches_table():
    for n in range(0, 400):
        assert trib_fast(n) == trib(n)
    rng = random.Random(20260822)
    for _ in range(50):
        n = rng.randint(400, 3000)
        assert trib_fast(n) == trib(n)


def test_values_upto():
    t = TribTable()
    vals = t.values_upto(100)
    assert vals[-1] == (10, 81)
    assert [v for _, v in vals] == [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81]
    assert t.values_upto(0) == [(0, 0), (1, 0)]


def test_index_window_width():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 10 ** 30)
        lo, hi = index_window(n)
        assert hi - lo == 1
        # the window is honest: T_(lo-1) <= n is not required, but any
        # index holding n must land inside it
        k = is_tribonacci(n)
        if k is not None and n >= 2:
            assert lo <= k <= hi


def test_membership_known():
    for n, v in enumerate(FIRST):
        assert is_tribonacci(v) is not None
    assert is_tribonacci(0) == 0          # smallest index for the duplicate 0
    assert is_tribonacci(1) == 2          # smallest index for the duplicate 1
    assert is_tribonacci(2) == 4
    assert is_tribonacci(81) == 10


def test_membership_rejects():
    for v in (3, 5, 6, 8, 12, 23, 43, 80, 82, 10 ** 18):
        assert is_tribonacci(v) is None


def test_membership_large():
    t = default_table()
    v = t.value(700)
    assert is_tribonacci(v) == 700
    assert is_tribonacci(v - 1) is None
    assert is_tribonacci(v + 1) is None


def test_first_index():
    t = default_table()
    assert t.first_index(1) == 2
    assert t.first_index(0) == 0
    assert t.first_index(44) == 9
    assert t.first_index(45) is None


def test_negative_handling():
    with pytest.raises(ValueError):
        trib(-1)
    # membership of a negative is simply false, not an error
    assert is_tribonacci(-5) is None
