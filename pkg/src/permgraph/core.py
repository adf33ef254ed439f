"""Plain permutation graphs and brute-force reference oracles.

A permutation graph is given by the array ``pi_inv`` (1-based values, stored
in a 0-based Python sequence): vertices ``u < v`` are adjacent iff
``pi_inv[u] > pi_inv[v]``.
"""

import math
import random
from collections import deque

INF = math.inf


class InvalidPermutation(ValueError):
    pass


def check_permutation(values):
    """Return ``values`` as a list after checking it is a bijection on [1..n]."""
    values = list(values)
    n = len(values)
    seen = [False] * (n + 1)
    for i, x in enumerate(values, 1):
        if not isinstance(x, int) or not 1 <= x <= n or seen[x]:
            raise InvalidPermutation(f"not a permutation of 1..{n}: bad entry {x!r} at position {i}")
        seen[x] = True
    return values


def invert(perm):
    """Inverse permutation, both 1-based valued."""
    perm = check_permutation(perm)
    inv = [0] * len(perm)
    for i, x in enumerate(perm, 1):
        inv[x - 1] = i
    return inv


def random_permutation(n, rng=None):
    rng = rng or random
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return p


def complement_permutation(pi_inv):
    """Permutation whose graph is the complement of the graph of ``pi_inv``."""
    n = len(pi_inv)
    return [n + 1 - x for x in pi_inv]


class ReferenceGraph:
    """Adjacency-set graph on vertices 1..n."""

    def __init__(self, n, edges=()):
        self.n = n
        self.adj = [set() for _ in range(n + 1)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u, v):
        if u == v:
            raise ValueError("self loops are not allowed")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u, v):
        return v in self.adj[u]

    def neighbors(self, v):
        return sorted(self.adj[v])

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        return sorted((u, v) for u in range(1, self.n + 1) for v in self.adj[u] if u < v)

    def edge_count(self):
        return sum(len(a) for a in self.adj) // 2

    def __eq__(self, other):
        return isinstance(other, ReferenceGraph) and self.n == other.n and self.adj == other.adj


def build_reference(pi_inv):
    """O(n^2) graph of all inversions of ``pi_inv``."""
    p = check_permutation(pi_inv)
    n = len(p)
    g = ReferenceGraph(n)
    for u in range(1, n + 1):
        pu = p[u - 1]
        for v in range(u + 1, n + 1):
            if pu > p[v - 1]:
                g.add_edge(u, v)
    return g


def bfs_all(g, source):
    """Hop distances from ``source``; index 0 is unused, unreachable is INF."""
    if not 1 <= source <= g.n:
        raise IndexError(f"source {source} outside [1..{g.n}]")
    dist = [INF] * (g.n + 1)
    dist[0] = None
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_path(g, source, target):
    """One shortest path as a vertex list, or None if unreachable."""
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for w in sorted(g.adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def inversions_count(pi_inv):
    """Number of inversions, counted with a Fenwick tree in O(n log n)."""
    p = check_permutation(pi_inv)
    n = len(p)
    tree = [0] * (n + 1)
    count = 0
    for seen, x in enumerate(p):
        # elements already inserted that are larger than x
        s, i = 0, x
        while i > 0:
            s += tree[i]
            i -= i & -i
        count += seen - s
        i = x
        while i <= n:
            tree[i] += 1
            i += i & -i
    return count


def is_bipartite(g):
    color = [None] * (g.n + 1)
    for s in range(1, g.n + 1):
        if color[s] is not None:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] is None:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_path(g, seq):
    """True iff consecutive vertices of ``seq`` are adjacent in ``g``."""
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def all_distances(g):
    """Full distance matrix (1-based rows/cols, index 0 unused) by BFS over
    integer bitmasks: each level is the union of the frontier's rows."""
    n = g.n
    masks = [0] * (n + 1)
    for u in range(1, n + 1):
        m = 0
        for w in g.adj[u]:
            m |= 1 << w
        masks[u] = m
    out = [None]
    for s in range(1, n + 1):
        row = [INF] * (n + 1)
        row[0] = None
        row[s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = d
                f ^= low
        out.append(row)
    return out
