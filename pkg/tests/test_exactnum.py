import math

import pytest
from hypothesis import given, strategies as st

from partstats.exactnum import bell, bell_mod, bell_mod_table, binomial, stirling2

BELL_SMALL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


def test_bell_small_values():
    for n, expected in enumerate(BELL_SMALL):
        assert bell(n) == expected


def test_bell_binomial_recurrence():
    for n in range(1, 40):
        assert bell(n + 1) == sum(binomial(n, k) * bell(k) for k in range(n + 1))


def test_stirling_rows():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]


@given(st.integers(min_value=0, max_value=30))
def test_stirling_row_sums_to_bell(n):
    assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


def test_binomial_matches_math_comb():
    for n in range(12):
        for k in range(-2, n + 3):
            expected = math.comb(n, k) if 0 <= k <= n else 0
            assert binomial(n, k) == expected


def test_stirling_recurrence():
    for n in range(1, 25):
        for k in range(1, n + 1):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@given(st.integers(min_value=0, max_value=120), st.integers(min_value=2, max_value=50))
def test_bell_mod_consistent_with_exact(n, m):
    assert bell_mod(n, m) == bell(n) % m


def test_bell_mod_table_shape():
    table = bell_mod_table(10, 4)
    assert table == [b % 4 for b in BELL_SMALL]


def test_bell_negative_rejected():
    with pytest.raises(ValueError):
        bell(-1)
