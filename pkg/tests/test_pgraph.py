import math
import random

import pytest
from hypothesis import given, strategies as st

from goldens import EX11
from permgraph.core import INF, InvalidPermutation, all_distances, build_reference, is_path
from permgraph.pgraph import SuccinctPermGraph

BACKENDS = ["array", "grid"]


def perms(max_n=40, min_n=1):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def members(bits):
    return [v for v in range(1, bits.n + 1) if bits.access(v)]


@pytest.fixture(params=BACKENDS)
def ex11(request):
    return SuccinctPermGraph(EX11, request.param)


# --- fixed examples --------------------------------------------------------------


def test_ex11_classes(ex11):
    assert members(ex11.Ax) == [1, 3, 9]
    assert members(ex11.Bx) == [5, 7, 11]
    assert members(ex11.Ay) == [5, 10, 11]
    assert members(ex11.By) == [1, 2, 6]
    assert not any(ex11.isolated(v) for v in range(1, 12))


def test_identity_all_isolated():
    g = SuccinctPermGraph(list(range(1, 9)))
    assert all(g.in_a(v) and g.in_b(v) and g.isolated(v) for v in range(1, 9))
    assert g.distance(1, 2) == INF
    assert g.degree(4) == 0
    assert g.next_neighbor(4) is None


def test_reverse_classes():
    n = 9
    g = SuccinctPermGraph(list(range(n, 0, -1)))
    assert members(g.Ax) == [1] and members(g.Bx) == [n]
    assert all(g.degree(v) == n - 1 for v in range(1, n + 1))


def test_ex11_adjacency(ex11):
    assert ex11.adjacent(1, 2) and ex11.adjacent(2, 1)
    assert not ex11.adjacent(1, 3)
    assert not ex11.adjacent(4, 4)


def test_ex11_neighbourhoods(ex11):
    assert sorted(ex11.neighbors_plus(3)) == [4, 5, 6, 7, 8, 10, 11]
    assert list(ex11.neighbors_minus(1)) == []
    assert sorted(ex11.neighbors_minus(5)) == [1, 2, 3, 4]
    assert sorted(ex11.neighbors_minus_complement(3)) == [1, 2]
    assert list(ex11.neighbors_minus_complement(1)) == []
    assert ex11.degree(3) == 7


def test_ex11_next_neighbor_chain(ex11):
    seq, w = [], None
    while True:
        w = ex11.next_neighbor(3, w)
        if w is None:
            break
        seq.append(w)
    assert sorted(seq) == [4, 5, 6, 7, 8, 10, 11]
    with pytest.raises(ValueError):
        ex11.next_neighbor(3, 1)


def test_ex11_extremal(ex11):
    e = ex11.extremal(5)
    assert (e.a_minus, e.a_plus, e.b_minus, e.b_plus) == (1, 3, 5, 5)
    e = ex11.extremal(1)
    assert (e.b_minus, e.b_plus) == (5, 7)
    for a in (1, 3, 9):
        assert ex11.a_plus(a) == a


def test_ex11_distance(ex11):
    assert ex11.distance_case(5, 9)[:2] == (3, 3)
    assert ex11.distance(5, 9) == 3 == ex11.distance(9, 5)
    assert ex11.spath_first(5, 9) == 3
    assert ex11.spath(5, 9) == [5, 3, 11, 9]
    assert ex11.spath(4, 4) == [4]
    assert ex11.spath_first(1, 2) == 2
    with pytest.raises(ValueError):
        ex11.spath_first(6, 6)


def test_invalid_input():
    with pytest.raises(InvalidPermutation):
        SuccinctPermGraph([1, 1, 2])
    with pytest.raises(ValueError):
        SuccinctPermGraph([])
    with pytest.raises(ValueError):
        SuccinctPermGraph([1], backend="tree")
    g = SuccinctPermGraph([2, 1])
    with pytest.raises(IndexError):
        g.adjacent(0, 1)
    with pytest.raises(IndexError):
        g.degree(3)


def test_unreachable_spath():
    g = SuccinctPermGraph([2, 1, 3])
    with pytest.raises(ValueError):
        g.spath(1, 3)


# --- oracle equivalence ---------------------------------------------------------


def _check_against_reference(p, backend):
    g = SuccinctPermGraph(p, backend)
    ref = build_reference(p)
    dist = all_distances(ref)
    n = len(p)
    for u in range(1, n + 1):
        assert g.pi_inv(u) == p[u - 1]
        nb = sorted(g.neighbors(u))
        assert nb == ref.neighbors(u)
        assert len(nb) == len(set(nb))
        assert g.degree(u) == ref.degree(u)
        for v in range(1, n + 1):
            assert g.adjacent(u, v) == ref.has_edge(u, v)
            d, case, w = g.distance_case(u, v)
            assert d == dist[u][v]
            if case in (1, 2, 3):
                assert d == case
            elif case == 4:
                assert d >= 4
            if 1 <= d < INF:
                assert ref.has_edge(u, w) and dist[w][v] == d - 1
    return g, ref, dist


def test_two_hundred_random_permutations():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 200 if rng.random() < 0.1 else 40)
        p = list(range(1, n + 1))
        rng.shuffle(p)
        _check_against_reference(p, "array")


@given(perms(30))
def test_grid_backend_against_reference(p):
    _check_against_reference(p, "grid")


@given(perms(30))
def test_backends_agree(p):
    a, b = SuccinctPermGraph(p, "array"), SuccinctPermGraph(p, "grid")
    n = len(p)
    for u in range(1, n + 1):
        assert a.extremal(u) == b.extremal(u)
        assert sorted(a.neighbors_minus(u)) == sorted(b.neighbors_minus(u))
        assert sorted(a.neighbors_minus_complement(u)) == sorted(b.neighbors_minus_complement(u))
        for v in range(1, n + 1):
            assert a.distance_case(u, v) == b.distance_case(u, v)


@given(perms(30))
def test_next_neighbor_visits_each_once(p):
    g = SuccinctPermGraph(p)
    ref = build_reference(p)
    for u in range(1, len(p) + 1):
        seq, w = [], None
        while True:
            w = g.next_neighbor(u, w)
            if w is None:
                break
            seq.append(w)
        assert sorted(seq) == ref.neighbors(u)
        assert len(seq) == len(set(seq))


@given(perms(30))
def test_extremal_set_definitions(p):
    g = SuccinctPermGraph(p)
    ref = build_reference(p)
    A = {v for v in range(1, len(p) + 1) if g.in_a(v)}
    B = {v for v in range(1, len(p) + 1) if g.in_b(v)}
    for v in range(1, len(p) + 1):
        if g.isolated(v):
            assert ref.degree(v) == 0
            continue
        e = g.extremal(v)
        nb = set(ref.neighbors(v))
        if v in A:
            assert e.a_plus == v
        else:
            assert (e.a_minus, e.a_plus) == (min(nb & A), max(nb & A))
        if v not in B:
            assert (e.b_minus, e.b_plus) == (min(nb & B), max(nb & B))


@given(perms(40))
def test_class_rows_from_bit_vectors(p):
    g = SuccinctPermGraph(p)
    A = [v for v in range(1, len(p) + 1) if g.in_a(v)]
    rows = [p[a - 1] for a in A]
    assert rows == sorted(rows)
    assert all(g.y_of_a(a) == p[a - 1] for a in A)
    assert g.in_a(1) and g.in_b(len(p))


@given(perms(40))
def test_complement_partition(p):
    g = SuccinctPermGraph(p)
    for v in range(1, len(p) + 1):
        assert len(list(g.neighbors_minus(v))) + len(list(g.neighbors_minus_complement(v))) == v - 1


@given(perms(30, 2), st.data())
def test_spath_properties(p, data):
    g = SuccinctPermGraph(p)
    ref = build_reference(p)
    n = len(p)
    u = data.draw(st.integers(1, n))
    v = data.draw(st.integers(1, n))
    d = g.distance(u, v)
    if d == INF:
        return
    path = g.spath(u, v)
    assert len(path) == d + 1 and path[0] == u and path[-1] == v
    assert is_path(ref, path)
    back = list(reversed(path))
    assert is_path(ref, back) and len(g.spath(v, u)) == len(back)
    for w in ref.neighbors(u):
        assert d <= 1 + g.distance(w, v)


# --- space and serialization --------------------------------------------------------


def test_space_budget():
    rng = random.Random(32)
    for n in (1 << 12, 1 << 16):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        g = SuccinctPermGraph(p)
        lg = math.ceil(math.log2(n))
        assert g.report_bits() <= n * lg + 24 * n
        assert g.space_report()["Pi"] == n * lg


@pytest.mark.parametrize("backend", BACKENDS)
def test_serialization_round_trip(backend):
    rng = random.Random(33)
    p = list(range(1, 61))
    rng.shuffle(p)
    g = SuccinctPermGraph(p, backend)
    data = g.to_bytes()
    assert data[:5] == b"SPGR1"
    h, off = SuccinctPermGraph.from_bytes(data)
    assert off == len(data) and h.backend == backend
    for u in range(1, 61):
        assert sorted(h.neighbors(u)) == sorted(g.neighbors(u))
        assert [h.distance(u, v) for v in range(1, 61)] == [g.distance(u, v) for v in range(1, 61)]
    with pytest.raises(ValueError):
        SuccinctPermGraph.from_bytes(b"XXXXX" + data[5:])
