import math
import random

import pytest
from hypothesis import given, strategies as st

from goldens import EX11
from permgraph.bits import BitSeq
from permgraph.rmq import BPTree, RmqIndex, cartesian_bp


def make(vals, mode="max", eps=0.25, probes=False):
    return RmqIndex(lambda i: vals[i - 1], len(vals), mode, eps, count_probes=probes)


def scan_argbest(vals, l, r, mode):
    best = l
    for i in range(l + 1, r + 1):
        if (vals[i - 1] > vals[best - 1]) if mode == "max" else (vals[i - 1] < vals[best - 1]):
            best = i
    return best


def scan_report(vals, l, r, y, mode):
    if mode == "max":
        return {i for i in range(l, r + 1) if vals[i - 1] >= y}
    return {i for i in range(l, r + 1) if vals[i - 1] <= y}


# --- fixed examples --------------------------------------------------------------


def test_ex11_range_argmax():
    idx = make(EX11)
    assert idx.range_argmax(1, 2) == 1
    assert idx.range_argmax(6, 11) == 9
    assert all(idx.range_argmax(i, i) == i for i in range(1, 12))


def test_ex11_first_geq():
    idx = make(EX11)
    assert idx.first_geq(4, 10, 9) == 9
    assert idx.first_geq(1, 11, math.inf) is None
    assert idx.first_geq(3, 8, -math.inf) == idx.range_argmax(3, 8) == 3


def test_ex11_iteration_set():
    idx = make(EX11)
    assert sorted(idx.iterate(4, 11, 8)) == [4, 9, 10]


def test_min_mirror_on_ex11():
    idx = make(EX11, "min")
    assert idx.range_argmin(1, 11) == 5
    assert idx.first_leq(6, 11, 3) == 7
    assert sorted(idx.iterate(1, 11, 4)) == [2, 5, 6, 7]


def test_singleton_below_threshold():
    idx = make([3])
    assert idx.first_geq(1, 1, 4) is None
    assert list(idx.iterate(1, 1, 4)) == []


def test_minus_infinity_enumerates_everything():
    vals = [random.Random(3).randint(1, 9) for _ in range(57)]
    idx = make(vals)
    out = list(idx.iterate(5, 50, -math.inf))
    assert sorted(out) == list(range(5, 51))


def test_wrong_orientation_and_bad_range():
    idx = make([1, 2, 3])
    with pytest.raises(TypeError):
        idx.range_argmin(1, 2)
    with pytest.raises(IndexError):
        idx.range_argmax(3, 2)
    with pytest.raises(IndexError):
        idx.range_argmax(0, 2)
    with pytest.raises(ValueError):
        RmqIndex(lambda i: 0, 3, "median")


def test_sentinels_allowed():
    vals = [-math.inf, 4, math.inf, 2, -math.inf]
    idx = make(vals)
    assert idx.range_argmax(1, 5) == 3
    assert sorted(idx.iterate(1, 5, 2)) == [2, 3, 4]


def test_literal_rule_counterexample():
    # restarting the preorder walk at the root block must not skip or repeat
    vals = [1, 5, 2, 4, 3]
    idx = make(vals, eps=1)
    for y in range(0, 7):
        out = list(idx.iterate(1, 5, y))
        assert len(out) == len(set(out))
        assert set(out) == scan_report(vals, 1, 5, y, "max")


# --- balanced parentheses ------------------------------------------------------


@given(st.lists(st.integers(0, 20), max_size=300), st.data())
def test_bp_primitives_against_excess_scans(vals, data):
    bits = cartesian_bp(vals)
    t = BPTree(BitSeq.from_bits(bits))
    E = [0]
    for b in bits:
        E.append(E[-1] + (1 if b else -1))
    L = len(bits)
    for _ in range(10):
        p = data.draw(st.integers(0, L))
        thr = data.draw(st.integers(-2, max(E) + 1))
        assert t.fwd(p, thr) == next((q for q in range(p + 1, L + 1) if E[q] <= thr), None)
        assert t.bwd(p, thr) == next((q for q in range(p - 1, -1, -1) if E[q] <= thr), None)
        if L:
            a = data.draw(st.integers(1, L))
            b = data.draw(st.integers(a, L))
            lo = min(E[a:b + 1])
            assert t.range_min(a, b) == lo
            assert t.leftmost_min(a, b) == E.index(lo, a)


# --- random arrays --------------------------------------------------------------


arrays = st.sampled_from([3, 20, 1000]).flatmap(
    lambda hi: st.lists(st.integers(1, hi), min_size=1, max_size=150))
modes = st.sampled_from(["max", "min"])
epss = st.sampled_from([1, 0.5, 0.25, 0.2, 0.1])


@given(arrays, modes, epss, st.data())
def test_argbest_matches_scan(vals, mode, eps, data):
    idx = make(vals, mode, eps)
    n = len(vals)
    for _ in range(20):
        l = data.draw(st.integers(1, n))
        r = data.draw(st.integers(l, n))
        got = idx.range_argmax(l, r) if mode == "max" else idx.range_argmin(l, r)
        assert got == scan_argbest(vals, l, r, mode)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=150), modes, epss, st.data())
def test_iteration_with_ties(vals, mode, eps, data):
    idx = make(vals, mode, eps)
    n = len(vals)
    for _ in range(10):
        l = data.draw(st.integers(1, n))
        r = data.draw(st.integers(l, n))
        y = data.draw(st.integers(0, 5))
        out = list(idx.iterate(l, r, y))
        assert len(out) == len(set(out))
        assert set(out) == scan_report(vals, l, r, y, mode)
        first = idx.first_geq(l, r, y) if mode == "max" else idx.first_leq(l, r, y)
        assert first == (out[0] if out else None)


@given(arrays, modes, epss, st.data())
def test_stateless_next_follows_iterate(vals, mode, eps, data):
    idx = make(vals, mode, eps)
    n = len(vals)
    l = data.draw(st.integers(1, n))
    r = data.draw(st.integers(l, n))
    y = data.draw(st.sampled_from(vals))
    out = list(idx.iterate(l, r, y))
    nxt = idx.next_geq if mode == "max" else idx.next_leq
    ctx = idx.context(l, r)
    for k, i in enumerate(out):
        expect = out[k + 1] if k + 1 < len(out) else None
        assert nxt(l, r, y, i) == expect
        assert nxt(l, r, y, i, ctx) == expect


def test_large_random_ranges():
    rng = random.Random(5)
    n = 4096
    vals = [rng.randint(1, n) for _ in range(n)]
    idx = make(vals)
    for _ in range(1000):
        l = rng.randint(1, n)
        r = rng.randint(l, min(n, l + rng.choice([10, 200, n])))
        assert idx.range_argmax(l, r) == scan_argbest(vals, l, r, "max")


# --- probes and space ------------------------------------------------------------


def _workload(seed, eps):
    rng = random.Random(seed)
    for trial in range(120):
        n = rng.randint(1, 300)
        kind = trial % 4
        if kind == 0:
            vals = [rng.randint(1, n) for _ in range(n)]
        elif kind == 1:
            vals = list(range(1, n + 1))
        elif kind == 2:
            vals = [rng.randint(1, 3) for _ in range(n)]
        else:
            vals = list(range(n, 0, -1))
        for mode in ("max", "min"):
            idx = make(vals, mode, eps, probes=True)
            for _ in range(8):
                l = rng.randint(1, n)
                r = rng.randint(l, n)
                y = rng.randint(0, n + 1)
                idx.probes = 0
                k = sum(1 for _ in idx.iterate(l, r, y))
                yield idx.c, k, idx.probes


@pytest.mark.parametrize("eps", [0.5, 0.25, 0.125])
def test_probes_per_query_bounded_by_blocks_touched(eps):
    # each reaching block costs its own scan plus at most two failing children
    for c, k, probes in _workload(7, eps):
        assert probes <= 3 * c * (k + 3)


@pytest.mark.parametrize("eps", [0.5, 0.25, 0.125])
def test_probes_within_step_budget_over_workload(eps):
    total = budget = 0
    for c, k, probes in _workload(8, eps):
        total += probes
        budget += (k + 1) * (4 + 2 * c)
    assert total <= budget


def test_index_space():
    rng = random.Random(9)
    n = 1 << 16
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    idx = make(vals)
    assert idx.tree.bp.n == 2 * math.ceil(n / idx.c) + 2
    assert idx.tree.bp.n <= 2 * 0.25 * n + 2
    # directories and the word-level min tree on top of the parentheses
    assert idx.report_bits() <= 2 * 0.25 * n + 0.4 * n


def test_serialization_round_trip():
    rng = random.Random(10)
    vals = [rng.randint(1, 99) for _ in range(500)]
    idx = make(vals, "min", 0.2)
    data = b"pad" + idx.to_bytes()
    back, off = RmqIndex.from_bytes(data, 3, lambda i: vals[i - 1])
    assert off == len(data)
    assert back.c == idx.c and back.mode == "min"
    for l, r in [(1, 500), (17, 230), (400, 401)]:
        assert back.range_argmin(l, r) == idx.range_argmin(l, r)
        assert sorted(back.iterate(l, r, 30)) == sorted(idx.iterate(l, r, 30))
