"""Bipartite permutation graphs in 2n bits plus rank/select directories.

In a bipartite permutation graph every non-isolated vertex is either a
prefix maximum of Π (side A) or a suffix minimum (side B), never both, so
the bit vector Ax (by vertex) and Ay (by row) describe the graph
completely. Bx and By are their complements. Isolated vertices must carry
the largest ids; they are fixed points of Π and stay outside both vectors.

    Π[v] = select1(Ay, rank1(Ax, v))   if v is in A
           select0(Ay, rank0(Ax, v))   otherwise

The neighbours of an A-vertex are the B-vertices in [b_minus(v), b_plus(v)]
and symmetrically for B, so neighbourhoods come out sorted and degrees are
a rank difference.
"""

import math
import struct

from .bits import BitSeq, ComplementView
from .core import check_permutation
from .pgraph import cascade
from .pio import ProperIntervalOracle, build_from_intervals

INF = math.inf
MAGIC = b"SBPG1"


class NotBipartite(ValueError):
    pass


class IsolatedNotOnTop(ValueError):
    pass


def _sides(p):
    n = len(p)
    ax, bx = [0] * n, [0] * n
    best = 0
    for i, y in enumerate(p):
        if y > best:
            best = y
            ax[i] = 1
    best = n + 1
    for i in range(n - 1, -1, -1):
        if p[i] < best:
            best = p[i]
            bx[i] = 1
    return ax, bx


def is_bipartite_perm(pi_inv):
    """O(n) test: the graph is bipartite iff every vertex is a prefix
    maximum or a suffix minimum (a vertex that is neither closes a triangle)."""
    ax, bx = _sides(check_permutation(pi_inv))
    return all(a or b for a, b in zip(ax, bx))


def canonical_relabel(pi_inv):
    """Move isolated vertices to the top ids, keeping the others in order.

    Returns ``(new_pi_inv, mapping)`` where ``mapping[v-1]`` is the new id of
    old vertex v. The relabelled graph is isomorphic to the original.
    """
    p = check_permutation(pi_inv)
    ax, bx = _sides(p)
    keep = [v for v in range(1, len(p) + 1) if not (ax[v - 1] and bx[v - 1])]
    iso = [v for v in range(1, len(p) + 1) if ax[v - 1] and bx[v - 1]]
    rows = sorted(p[v - 1] for v in keep)
    rank = {y: i for i, y in enumerate(rows, 1)}
    mapping = [0] * len(p)
    new = []
    for v in keep:
        mapping[v - 1] = len(new) + 1
        new.append(rank[p[v - 1]])
    for v in iso:
        mapping[v - 1] = len(new) + 1
        new.append(len(new) + 1)
    return new, mapping


class BipartitePermGraph:
    def __init__(self, pi_inv, with_oracles=False, pio_stride=None):
        p = check_permutation(pi_inv)
        if not p:
            raise ValueError("graph needs at least one vertex")
        n = len(p)
        ax, bx = _sides(p)
        for v in range(1, n + 1):
            if not (ax[v - 1] or bx[v - 1]):
                raise NotBipartite(f"vertex {v} lies on a triangle (neither prefix max nor suffix min)")
        w = 0
        while w < n and ax[n - 1 - w] and bx[n - 1 - w]:
            w += 1
        m = n - w
        for v in range(1, m + 1):
            if ax[v - 1] and bx[v - 1]:
                raise IsolatedNotOnTop(f"isolated vertex {v} below non-isolated ones; "
                                       "use canonical_relabel first")
        self.n, self.w, self.m = n, w, m
        ay = [0] * m
        for i in range(m):
            ay[p[i] - 1] = ax[i]
        self.Ax = BitSeq.from_bits(ax[:m])
        self.Ay = BitSeq.from_bits(ay)
        self._views()
        self.GA = self.GB = None
        if with_oracles:
            self._build_oracles(pio_stride)

    def _views(self):
        self.Bx = ComplementView(self.Ax)
        self.By = ComplementView(self.Ay)

    def _build_oracles(self, stride):
        a_ivs = [(self.b_minus(a), self.b_plus(a), a) for a in self.Ax.ones_positions()]
        b_ivs = [(self.a_minus(b), self.a_plus(b), b)
                 for b in range(1, self.m + 1) if not self.Ax.access(b)]
        self.GA = build_from_intervals(a_ivs, stride)
        self.GB = build_from_intervals(b_ivs, stride)

    # --- basic access ---------------------------------------------------------

    def _check(self, v):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside [1..{self.n}]")

    def in_a(self, v):
        self._check(v)
        return v <= self.m and self.Ax.access(v) == 1

    def in_b(self, v):
        self._check(v)
        return v <= self.m and self.Ax.access(v) == 0

    def isolated(self, v, y=None):
        return v > self.m

    def pi_inv(self, v):
        self._check(v)
        if v > self.m:
            return v
        if self.Ax.access(v):
            return self.Ay.select1(self.Ax.rank1(v))
        return self.Ay.select0(self.Ax.rank0(v))

    def adjacent(self, u, v):
        self._check(u)
        self._check(v)
        if u > self.m or v > self.m or self.Ax.access(u) == self.Ax.access(v):
            return False
        return (u - v) * (self.pi_inv(u) - self.pi_inv(v)) < 0

    # --- extremal neighbours (vertices <= m only) -------------------------------

    def a_plus(self, v):
        return self.Ax.select1(self.Ax.rank1(v))

    def a_minus(self, v, y=None):
        if y is None:
            y = self.pi_inv(v)
        return self.Ax.select1(self.Ay.rank1(y - 1) + 1)

    def b_plus(self, v, y=None):
        if y is None:
            y = self.pi_inv(v)
        return self.Bx.select1(self.By.rank1(y))

    def b_minus(self, v):
        return self.Bx.select1(self.Bx.rank1(v - 1) + 1)

    def y_of_a(self, a):
        return self.Ay.select1(self.Ax.rank1(a))

    def y_of_b(self, b):
        return self.By.select1(self.Bx.rank1(b))

    def dist_a(self, a1, a2):
        return self.GA.dist(self.Ax.rank1(a1), self.Ax.rank1(a2))

    def dist_b(self, b1, b2):
        return self.GB.dist(self.Bx.rank1(b1), self.Bx.rank1(b2))

    # --- neighbourhoods ----------------------------------------------------------

    def _span(self, v):
        """(rank range lo, hi, bit) of v's neighbours on the other side."""
        if self.Ax.access(v):
            lo, hi = self.b_minus(v), self.b_plus(v)
            return self.Ax.rank0(lo), self.Ax.rank0(hi), 0
        lo, hi = self.a_minus(v), self.a_plus(v)
        return self.Ax.rank1(lo), self.Ax.rank1(hi), 1

    def neighbors(self, v):
        """Neighbours of v in increasing order."""
        self._check(v)
        if v > self.m:
            return
        lo, hi, bit = self._span(v)
        sel = self.Ax.select1 if bit else self.Ax.select0
        for k in range(lo, hi + 1):
            yield sel(k)

    def degree(self, v):
        self._check(v)
        if v > self.m:
            return 0
        lo, hi, _ = self._span(v)
        return hi - lo + 1

    # --- distances -------------------------------------------------------------------

    def spath_first(self, u, v):
        """Next vertex from u towards v: v itself if adjacent, else the
        farthest neighbour of u in v's direction."""
        self._check(u)
        self._check(v)
        if u == v or u > self.m or v > self.m:
            raise ValueError(f"no first step from {u} to {v}")
        if self.adjacent(u, v):
            return v
        if self.Ax.access(u):
            return self.b_plus(u) if v > u else self.b_minus(u)
        return self.a_plus(u) if v > u else self.a_minus(u)

    def distance(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        if u > self.m or v > self.m:
            return INF
        if self.GA is not None:
            return cascade(self, u, self.pi_inv(u), v, self.pi_inv(v))[0]
        path = self._walk(u, v)
        return INF if path is None else len(path) - 1

    def _walk(self, u, v):
        # a shortest path never revisits a vertex; the greedy walk only
        # revisits once it has run out of graph, which means unreachable
        path = [u]
        while path[-1] != v:
            nxt = self.spath_first(path[-1], v)
            if len(path) >= 2 and nxt == path[-2] or len(path) > self.n:
                return None
            path.append(nxt)
        return path

    def spath(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return [u]
        path = self._walk(u, v) if u <= self.m and v <= self.m else None
        if path is None:
            raise ValueError(f"{v} is unreachable from {u}")
        return path

    # --- Hamiltonicity ------------------------------------------------------------------

    def _alternate(self, first_a):
        k, s = self.Ax.ones, self.m - self.Ax.ones
        if first_a and s not in (k - 1, k):
            return None
        if not first_a and k not in (s - 1, s):
            return None
        out = []
        for i in range(1, self.m + 1):
            j = (i + 1) // 2
            take_a = (i % 2 == 1) == first_a
            out.append(self.Ax.select1(j) if take_a else self.Ax.select0(j))
        for x, y in zip(out, out[1:]):
            if not self.adjacent(x, y):
                return None
        return out

    def hamiltonian_path(self):
        """Alternating path a1 b1 a2 b2 ... (or b1 a1 ...), or None."""
        if self.n == 1:
            return [1]
        if self.w:
            return None
        return self._alternate(True) or self._alternate(False)

    def hamiltonian_cycle(self):
        """Hamiltonian cycle as a vertex sequence (closing edge implied), or None.

        Needs |A| = |B| >= 2 and every a_i b_i a_{i+1} b_{i+1} to be a 4-cycle.
        With x = a1 b1 a2 b2 ... the cycle climbs through x_1 and every x_j
        with j = 2, 3 (mod 4), then returns through j = 0, 1 (mod 4), j >= 4.
        """
        if self.w or self.m < 4 or 2 * self.Ax.ones != self.m:
            return None
        k = self.m // 2
        sel1, sel0 = self.Ax.select1, self.Ax.select0
        for i in range(1, k):
            a, b, a2, b2 = sel1(i), sel0(i), sel1(i + 1), sel0(i + 1)
            if not (self.adjacent(a, b) and self.adjacent(b, a2)
                    and self.adjacent(a2, b2) and self.adjacent(a, b2)):
                return None

        def x(j):
            return sel1((j + 1) // 2) if j % 2 else sel0(j // 2)

        up = [x(j) for j in range(1, 2 * k + 1) if j == 1 or j % 4 in (2, 3)]
        down = [x(j) for j in range(2 * k, 3, -1) if j % 4 in (0, 1)]
        return up + down

    # --- space and serialization ---------------------------------------------------------

    def space_report(self):
        parts = {"payload": 2 * self.m,
                 "directories": self.Ax.report_bits() + self.Ay.report_bits() - 2 * self.m,
                 "header": 128}
        if self.GA is not None:
            parts["GA"] = self.GA.report_bits()
            parts["GB"] = self.GB.report_bits()
        parts["total"] = sum(parts.values())
        return parts

    def report_bits(self):
        return self.space_report()["total"]

    def to_bytes(self):
        flag = 1 if self.GA is not None else 0
        parts = [MAGIC, struct.pack("<QQB", self.n, self.w, flag),
                 self.Ax.to_bytes(), self.Ay.to_bytes()]
        if flag:
            parts += [self.GA.to_bytes(), self.GB.to_bytes()]
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data, offset=0):
        if data[offset:offset + 5] != MAGIC:
            raise ValueError("not a serialized bipartite permutation graph")
        obj = cls.__new__(cls)
        obj.n, obj.w, flag = struct.unpack_from("<QQB", data, offset + 5)
        offset += 5 + struct.calcsize("<QQB")
        obj.m = obj.n - obj.w
        obj.Ax, offset = BitSeq.from_bytes(data, offset)
        obj.Ay, offset = BitSeq.from_bytes(data, offset)
        obj._views()
        obj.GA = obj.GB = None
        if flag:
            obj.GA, offset = ProperIntervalOracle.from_bytes(data, offset)
            obj.GB, offset = ProperIntervalOracle.from_bytes(data, offset)
        return obj, offset
