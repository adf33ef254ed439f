"""Algorithms that run directly on a SuccinctPermGraph.

Ordering the vertices 1..n orients every edge u -> v (u < v) transitively,
so the longest chain ending at v gives both a maximum clique and a colouring
with the same number of colours. Running the DP over the complement
neighbourhoods gives a maximum independent set and a minimum clique cover.
"""

import math
from collections import namedtuple

INF = math.inf

CliqueColoring = namedtuple("CliqueColoring", "L omega clique")


def _longest_chain(n, lower_neighbors):
    L = [0] * (n + 1)
    pred = [0] * (n + 1)
    for v in range(1, n + 1):
        best, arg = 0, 0
        for u in lower_neighbors(v):
            if L[u] > best or (L[u] == best and u < arg):
                best, arg = L[u], u
        L[v] = best + 1
        pred[v] = arg
    omega = max(L[1:], default=0)
    end = L.index(omega, 1) if n else 0
    clique = []
    while end:
        clique.append(end)
        end = pred[end]
    return CliqueColoring(L[1:], omega, clique[::-1])


def max_clique_min_coloring(g):
    """Maximum clique and optimal colouring (colour of v = L[v-1])."""
    return _longest_chain(g.n, g.neighbors_minus)


def max_independent_set_min_clique_cover(g):
    """Maximum independent set (as ``clique``) and a clique cover given as
    class labels ``L``; both come from the complement graph."""
    return _longest_chain(g.n, g.neighbors_minus_complement)


# --- distances in bulk ------------------------------------------------------------


class _Tables:
    """Per-vertex extremal neighbours and interval reach tables, O(n) words.

    This is working memory of a bulk query, not part of the structure.
    """

    def __init__(self, g):
        n = g.n
        L = g.layer
        self.n = n
        self.y = [0] + [g.pi_inv(v) for v in range(1, n + 1)]
        self.ap = [None] + [L.a_plus(v) for v in range(1, n + 1)]
        self.am = [None] + [L.a_minus(v, self.y[v]) for v in range(1, n + 1)]
        self.bp = [None] + [L.b_plus(v, self.y[v]) for v in range(1, n + 1)]
        self.bm = [None] + [L.b_minus(v) for v in range(1, n + 1)]
        self.iso = [False] + [L.isolated(v) for v in range(1, n + 1)]
        self.rank_a = [0] + [L.Ax.rank1(v) for v in range(1, n + 1)]
        self.rank_b = [0] + [L.Bx.rank1(v) for v in range(1, n + 1)]
        self.ga = self._reach(L.GA)
        self.gb = self._reach(L.GB)

    @staticmethod
    def _reach(o):
        k = o.n
        return ([0] + [o.back(i) for i in range(1, k + 1)],
                [0] + [o.reach(i) for i in range(1, k + 1)])

    @staticmethod
    def ball_row(tables, s):
        """Hop distances from s in a proper interval graph given as
        (back, reach) tables; balls are contiguous so each grows at both ends."""
        back, reach = tables
        k = len(back) - 1
        row = [INF] * (k + 1)
        row[s] = 0
        lo = hi = s
        d = 0
        while True:
            nlo, nhi = back[lo], reach[hi]
            if nlo == lo and nhi == hi:
                return row
            d += 1
            row[nlo:lo] = [d] * (lo - nlo)
            row[hi + 1:nhi + 1] = [d] * (nhi - hi)
            lo, hi = nlo, nhi


def _row(t, u, rows):
    """All distances from u, mirroring the case analysis of pgraph.cascade."""
    n = t.n
    y, ap, am, bp, bm, ra, rb = t.y, t.ap, t.am, t.bp, t.bm, t.rank_a, t.rank_b
    out = [INF] * n
    out[u - 1] = 0
    yu = y[u]
    for v in range(1, u):
        if y[v] > yu:
            out[v - 1] = 1
    for v in range(u + 1, n + 1):
        if y[v] < yu:
            out[v - 1] = 1
    if t.iso[u]:
        return out

    def row_of(side, x):
        key = (side, x)
        r = rows.get(key)
        if r is None:
            if side == "a":
                r = _Tables.ball_row(t.ga, ra[x])
            else:
                r = _Tables.ball_row(t.gb, rb[x])
            rows[key] = r
        return r

    # towards larger ids
    sa, sb = ap[u], bp[u]
    sa_sb = ap[sb] if sb is not None else None
    sb_sa = bp[sa] if sa is not None else None
    legs = []
    for base, x, side in ((2, sb, "b"), (3, sb_sa, "b"), (2, sa, "a"), (3, sa_sb, "a")):
        if x is not None:
            legs.append((base, row_of(side, x), side == "a"))
    for v in range(u + 1, n + 1):
        if out[v - 1] == 1 or t.iso[v]:
            continue
        ta, tb = am[v], bm[v]
        if (ta is not None and sa is not None and ta <= sa) or \
           (tb is not None and sb is not None and tb <= sb):
            out[v - 1] = 2
            continue
        if (ta is not None and sa_sb is not None and ta <= sa_sb) or \
           (tb is not None and sb_sa is not None and tb <= sb_sa):
            out[v - 1] = 3
            continue
        best = INF
        for base, r, on_a in legs:
            target = ta if on_a else tb
            if target is None:
                continue
            d = r[ra[target] if on_a else rb[target]]
            if d != INF and base + 2 * d < best:
                best = base + 2 * d
        out[v - 1] = best

    # towards smaller ids: A and B trade places
    sa, sb = bm[u], am[u]
    sa_sb = bm[sb] if sb is not None else None
    sb_sa = am[sa] if sa is not None else None
    legs = []
    for base, x, side in ((2, sb, "a"), (3, sb_sa, "a"), (2, sa, "b"), (3, sa_sb, "b")):
        if x is not None:
            legs.append((base, row_of(side, x), side == "a"))
    for v in range(1, u):
        if out[v - 1] == 1 or t.iso[v]:
            continue
        ta, tb = bp[v], ap[v]
        if (ta is not None and sa is not None and ta >= sa) or \
           (tb is not None and sb is not None and tb >= sb):
            out[v - 1] = 2
            continue
        if (ta is not None and sa_sb is not None and ta >= sa_sb) or \
           (tb is not None and sb_sa is not None and tb >= sb_sa):
            out[v - 1] = 3
            continue
        best = INF
        for base, r, on_a in legs:
            target = tb if on_a else ta
            if target is None:
                continue
            d = r[ra[target] if on_a else rb[target]]
            if d != INF and base + 2 * d < best:
                best = base + 2 * d
        out[v - 1] = best
    return out


def apsp(g, pairs=None):
    """Distances for the given (u, v) pairs, or every row of the full matrix.

    With ``pairs`` each answer is one O(1) distance query. Without, rows
    ``[d(u,1), ..., d(u,n)]`` for u = 1..n are generated after an O(n) table
    setup; each row costs O(n) plus O(|A| + |B|) per distinct interval-graph
    source touched.
    """
    if pairs is not None:
        return (g.distance(u, v) for u, v in pairs)
    return _all_rows(g)


def _all_rows(g):
    t = _Tables(g)
    rows = {}
    for u in range(1, g.n + 1):
        if len(rows) > 64:
            rows.clear()
        yield _row(t, u, rows)


def spath_pairs(g, pairs):
    """One shortest path per pair; None marks an unreachable pair."""
    for u, v in pairs:
        if g.distance(u, v) == INF:
            yield None
        else:
            yield g.spath(u, v)
