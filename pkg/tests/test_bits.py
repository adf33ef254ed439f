import random

import pytest
from hypothesis import given, strategies as st

from permgraph.bits import BitSeq, ComplementView, PackedInts, width_for

EX11_AX = [1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0]


def scan_select(bits, k, alpha):
    seen = 0
    for i, b in enumerate(bits, 1):
        if b == alpha:
            seen += 1
            if seen == k:
                return i
    return None


def test_ex11_ax_access_rank_select():
    b = BitSeq.from_bits(EX11_AX)
    assert b.access(3) == 1
    assert b.rank(5, 1) == 2
    assert b.select(3, 1) == 9
    assert b.select(4, 1) is None
    assert b.rank(0, 1) == 0
    assert b.rank(11, 0) == 11 - 3


def test_all_zero_access():
    b = BitSeq.from_bits([0] * 100)
    assert all(b.access(i) == 0 for i in range(1, 101))
    assert b.select1(1) is None


def test_out_of_range():
    b = BitSeq.from_bits([1, 0, 1])
    with pytest.raises(IndexError):
        b.access(0)
    with pytest.raises(IndexError):
        b.access(4)
    with pytest.raises(IndexError):
        b.rank1(4)
    assert b.select1(0) is None


def test_from_positions():
    b = BitSeq.from_positions(10, [1, 4, 10])
    assert b.to_list() == [1, 0, 0, 1, 0, 0, 0, 0, 0, 1]
    with pytest.raises(IndexError):
        BitSeq.from_positions(3, [4])


bitlists = st.lists(st.integers(0, 1), max_size=1500)


@given(bitlists)
def test_rank_select_against_scans(bits):
    b = BitSeq.from_bits(bits)
    n = len(bits)
    ones = sum(bits)
    assert b.ones == ones
    acc = 0
    for i in range(n + 1):
        if i:
            acc += bits[i - 1]
        assert b.rank1(i) == acc
        assert b.rank1(i) + b.rank0(i) == i
    for k in range(1, ones + 2):
        assert b.select1(k) == scan_select(bits, k, 1)
    for k in range(1, n - ones + 2):
        assert b.select0(k) == scan_select(bits, k, 0)


@given(bitlists)
def test_rank_select_adjunction(bits):
    b = BitSeq.from_bits(bits)
    for k in range(1, b.ones + 1):
        assert b.rank1(b.select1(k)) == k
    for k in range(1, b.n - b.ones + 1):
        assert b.rank0(b.select0(k)) == k


@given(st.lists(st.integers(0, 1), min_size=1, max_size=300))
def test_next1(bits):
    b = BitSeq.from_bits(bits)
    for i in range(0, len(bits) + 1):
        expect = next((j for j in range(i + 1, len(bits) + 1) if bits[j - 1]), None)
        assert b.next1(i) == expect


@given(bitlists)
def test_serialization_round_trip(bits):
    b = BitSeq.from_bits(bits)
    data = b"xx" + b.to_bytes()
    c, off = BitSeq.from_bytes(data, 2)
    assert c == b and off == len(data)
    assert c.select1(1) == b.select1(1)


@given(bitlists)
def test_complement_view(bits):
    b = BitSeq.from_bits(bits)
    c = ComplementView(b)
    flipped = [1 - x for x in bits]
    for i in range(1, len(bits) + 1):
        assert c.access(i) == flipped[i - 1]
        assert c.rank1(i) == sum(flipped[:i])
    for k in range(1, c.ones + 1):
        assert c.select1(k) == scan_select(flipped, k, 1)
    assert c.report_bits() == 0


@given(st.integers(1, 64).flatmap(
    lambda w: st.tuples(st.just(w), st.lists(st.integers(0, (1 << w) - 1), max_size=200))))
def test_packed_ints(case):
    w, vals = case
    p = PackedInts(vals, w)
    assert p.to_list() == vals
    assert all(p.get(i + 1) == v for i, v in enumerate(vals))
    q, _ = PackedInts.from_bytes(p.to_bytes())
    assert q.to_list() == vals


def test_packed_ints_rejects_wide_values():
    with pytest.raises(ValueError):
        PackedInts([8], 3)
    with pytest.raises(IndexError):
        PackedInts([1, 2], 2).get(3)


def test_width_for():
    assert [width_for(x) for x in (0, 1, 2, 3, 4, 255, 256)] == [1, 1, 2, 2, 3, 8, 9]


def test_directory_overhead_budget():
    rng = random.Random(11)
    n = 1 << 16
    b = BitSeq.from_bits([rng.getrandbits(1) for _ in range(n)])
    assert b.report_bits() <= 1.25 * n
