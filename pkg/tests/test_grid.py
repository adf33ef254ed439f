import math
import random

import pytest
from hypothesis import given, strategies as st

from goldens import EX11
from permgraph.grid import PermGrid


def brute_report(p, x1, x2, y1, y2):
    return [(x, p[x - 1]) for x in range(max(1, x1), min(len(p), x2) + 1) if y1 <= p[x - 1] <= y2]


def test_ex11_counts():
    g = PermGrid(EX11)
    assert g.count(1, 2, 10, 11) == 0
    assert g.count(4, 11, 1, 10) == 7
    assert g.count(1, 11, 1, 11) == 11


def test_ex11_report_and_maps():
    g = PermGrid(EX11)
    assert g.report(1, 10, 11, 11) == [(9, 11)]
    assert g.report(2, 1, 1, 11) == []
    assert len(g.report(1, 11, 1, 11)) == 11
    assert g.y_for_x(3) == 10
    assert g.x_for_y(1) == 5


def test_clamping_and_bounds():
    g = PermGrid(EX11)
    assert g.count(-5, 40, -1, 99) == 11
    assert g.count(5, 4, 1, 11) == 0
    with pytest.raises(IndexError):
        g.y_for_x(12)
    with pytest.raises(IndexError):
        g.x_for_y(0)


def test_single_point():
    g = PermGrid([1])
    assert g.y_for_x(1) == 1 and g.x_for_y(1) == 1
    assert g.report(1, 1, 1, 1) == [(1, 1)]


@given(st.integers(1, 80).flatmap(lambda n: st.permutations(list(range(1, n + 1)))), st.data())
def test_against_brute_force(p, data):
    g = PermGrid(p)
    n = len(p)
    for x in range(1, n + 1):
        assert g.y_for_x(x) == p[x - 1]
        assert g.x_for_y(g.y_for_x(x)) == x
    for _ in range(15):
        x1, x2 = sorted(data.draw(st.integers(1, n)) for _ in range(2))
        y1, y2 = sorted(data.draw(st.integers(1, n)) for _ in range(2))
        exp = brute_report(p, x1, x2, y1, y2)
        assert g.report(x1, x2, y1, y2) == exp
        assert g.count(x1, x2, y1, y2) == len(exp)


def test_many_rectangles_n2048():
    rng = random.Random(12)
    n = 2048
    p = list(range(1, n + 1))
    rng.shuffle(p)
    g = PermGrid(p)
    for _ in range(10000):
        x1 = rng.randint(1, n)
        x2 = rng.randint(x1, min(n, x1 + rng.choice([4, 60, n])))
        y1 = rng.randint(1, n)
        y2 = rng.randint(y1, min(n, y1 + rng.choice([4, 60, n])))
        c = g.count(x1, x2, y1, y2)
        if rng.random() < 0.1:
            assert g.report(x1, x2, y1, y2) == brute_report(p, x1, x2, y1, y2)
        assert c == sum(1 for x in range(x1, x2 + 1) if y1 <= p[x - 1] <= y2)


def test_space_budget():
    rng = random.Random(13)
    n = 1 << 16
    p = list(range(1, n + 1))
    rng.shuffle(p)
    g = PermGrid(p)
    lg = math.ceil(math.log2(n))
    assert g.report_bits() <= 1.25 * n * lg


def test_serialization_round_trip():
    p = [3, 1, 4, 2, 6, 5]
    g, off = PermGrid.from_bytes(PermGrid(p).to_bytes())
    assert [g.y_for_x(x) for x in range(1, 7)] == p
    assert g.count(1, 6, 2, 5) == 4
