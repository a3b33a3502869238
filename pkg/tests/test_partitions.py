import pytest
from hypothesis import given, settings, strategies as st

from partstats.exactnum import bell
from partstats.partitions import (
    MarkedSetPartition,
    PartitionError,
    SetPartition,
    block_extrema,
    enumerate_partitions,
    from_blocks,
    iter_rgs,
    marked_enumerate,
    parse_partition,
)


def test_enumeration_counts_match_bell():
    for n in range(9):
        assert sum(1 for _ in enumerate_partitions(n)) == bell(n)


def test_rgs_enumeration_is_strictly_increasing_lex():
    for n in range(1, 7):
        seqs = list(iter_rgs(n))
        assert seqs == sorted(seqs)
        assert len(seqs) == len(set(seqs)) == bell(n)


def test_blocks_of_canonical_example():
    lam = parse_partition("1356|27|4")
    assert lam.n == 7
    assert lam.blocks() == [[1, 3, 5, 6], [2, 7], [4]]
    assert lam.block_count == 3
    assert str(lam) == "1356|27|4"


def test_parse_partition_formats_agree():
    a = parse_partition("1356|27|4")
    b = parse_partition("1,3,5,6|2,7|4")
    c = parse_partition("0,1,0,2,0,0,1")
    assert a == b == c


def test_parse_partition_rejects_garbage():
    for bad in ["13|13", "1|3", "0,2", "1x3", "|", "2|1,1"]:
        with pytest.raises(PartitionError):
            parse_partition(bad)


def test_arcs_and_extrema():
    lam = parse_partition("1356|27|4")
    assert sorted(lam.arcs()) == [(1, 3), (2, 7), (3, 5), (5, 6)]
    firsts, lasts, mins, maxes = block_extrema(lam)
    assert firsts == {1, 2, 4}
    assert lasts == {4, 6, 7}
    assert mins == [1, 2, 4]
    assert maxes == [6, 7, 4]


@given(st.integers(min_value=0, max_value=8))
def test_arc_count_plus_blocks_equals_n(n):
    for lam in enumerate_partitions(n):
        assert len(lam.arcs()) + lam.block_count == n


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=7))
def test_from_blocks_roundtrip(n):
    for lam in enumerate_partitions(n):
        assert from_blocks(lam.blocks()) == lam


def test_invalid_rgs_rejected():
    for bad in [(1,), (0, 2), (0, 1, 3)]:
        with pytest.raises(PartitionError):
            SetPartition(bad)


def test_marked_enumeration_counts():
    # each partition contributes 2^(number of blocks) markings
    for n in range(6):
        expected = sum(2 ** lam.block_count for lam in enumerate_partitions(n))
        got = sum(1 for _ in marked_enumerate(n))
        assert got == expected


def test_marked_open_count_consistent():
    for mu in marked_enumerate(4):
        assert isinstance(mu, MarkedSetPartition)
        assert mu.open_count == sum(mu.open_flags)
        assert len(mu.open_flags) == mu.base.block_count


def test_same_block():
    lam = parse_partition("1356|27|4")
    assert lam.same_block(1, 5)
    assert lam.same_block(2, 7)
    assert not lam.same_block(1, 4)


def test_hash_and_equality():
    a = parse_partition("12|3")
    b = from_blocks([(1, 2), (3,)])
    assert a == b and hash(a) == hash(b)
    assert a != parse_partition("123")
