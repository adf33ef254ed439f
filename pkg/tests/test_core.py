import math

import pytest
from hypothesis import given, strategies as st

from goldens import EX11, EX11_PERM
from permgraph.core import (INF, InvalidPermutation, all_distances, bfs_all, bfs_path,
                            build_reference, check_permutation, complement_permutation,
                            inversions_count, invert, is_path)


def perms(max_n=40, min_n=1):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_ex11_inverse_of_caption_permutation():
    assert EX11 == [5, 3, 10, 9, 1, 4, 2, 7, 11, 8, 6]
    assert invert(EX11) == EX11_PERM


def test_ex11_reference_edges():
    g = build_reference(EX11)
    assert g.edge_count() == 24
    assert g.has_edge(1, 2) and g.has_edge(3, 11)
    assert not g.has_edge(1, 3)


def test_identity_has_no_edges():
    assert build_reference(list(range(1, 9))).edge_count() == 0


def test_reversal_is_complete():
    n = 7
    g = build_reference(list(range(n, 0, -1)))
    assert g.edge_count() == n * (n - 1) // 2


@pytest.mark.parametrize("bad", [[1, 1], [0, 1], [2, 3], [1, 2.0], [3]])
def test_rejects_non_bijections(bad):
    with pytest.raises(InvalidPermutation):
        build_reference(bad)


def test_bfs_ex11_from_5():
    d = bfs_all(build_reference(EX11), 5)
    assert d[9] == 3 and d[5] == 0


def test_bfs_empty_and_complete():
    d = bfs_all(build_reference([1, 2, 3, 4]), 1)
    assert d[1] == 0 and all(x == INF for x in d[2:])
    d = bfs_all(build_reference([4, 3, 2, 1]), 1)
    assert d[1:] == [0, 1, 1, 1]


def test_bfs_source_out_of_range():
    with pytest.raises(IndexError):
        bfs_all(build_reference([1, 2]), 3)


def test_inversion_counts():
    assert inversions_count(EX11) == 24
    assert inversions_count([1, 2, 3]) == 0
    assert inversions_count(list(range(10, 0, -1))) == 45


def test_bfs_path_is_shortest():
    g = build_reference(EX11)
    p = bfs_path(g, 5, 9)
    assert p[0] == 5 and p[-1] == 9 and len(p) == 4 and is_path(g, p)
    assert bfs_path(build_reference([1, 2]), 1, 2) is None


@given(perms(60))
def test_edge_count_matches_inversions(p):
    assert build_reference(p).edge_count() == inversions_count(p)


@given(perms(40))
def test_degree_formula(p):
    g = build_reference(p)
    n = len(p)
    for v in range(1, n + 1):
        lower = sum(1 for u in range(1, v) if p[u - 1] > p[v - 1])
        upper = sum(1 for u in range(v + 1, n + 1) if p[u - 1] < p[v - 1])
        assert g.degree(v) == lower + upper


@given(perms(30))
def test_complement_permutation_gives_complement_graph(p):
    g, h = build_reference(p), build_reference(complement_permutation(p))
    n = len(p)
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            assert g.has_edge(u, v) != h.has_edge(u, v)


@given(perms(40))
def test_bitmask_distances_match_bfs(p):
    g = build_reference(p)
    mat = all_distances(g)
    for s in range(1, len(p) + 1):
        assert mat[s] == bfs_all(g, s)


@given(perms(50))
def test_invert_is_involution(p):
    assert invert(invert(p)) == check_permutation(p)
    assert math.isinf(INF)
