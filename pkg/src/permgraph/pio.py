"""Distance oracle for proper interval graphs in O(n) bits.

Vertices are numbered by left endpoint. All endpoints, sorted, form the bit
sequence ``E`` (1 = left end, 0 = right end), from which

    reach(v) = rank1(E, select0(E, v))        rightmost vertex meeting v
    back(v)  = rank0(E, select1(E, v)) + 1    leftmost vertex meeting v

and the neighbourhood of v is the range [back(v) .. reach(v)].

Distances. Each component is split into BFS levels from its leftmost vertex
(level k ends at vertex t_k, with t_{k+1} = reach(t_k)). For u < v in one
component and Δ = level(v) - level(u) >= 1 the distance is Δ when
reach^Δ(u) >= v and Δ + 1 otherwise. ``reach`` maps the closed range
[t_{k-1}, t_k] onto [t_k, t_{k+1}], so these ranges form the layers of a
planar forest (parent = reach, children ordered by id) in which
reach^Δ(u) >= v  iff  preorder(u) >= preorder(v).

Only every K-th level (K = ceil(lg n)) keeps preorder ranks, taken in the
contracted forest whose parent is the K-fold reach. A query walks u up with
``reach`` to the first sampled level and v down with ``back`` to the last
sampled level below it, then compares two stored ranks. ``stride=1`` samples
every level, which makes queries O(1) at the cost of lg n bits per vertex.
"""

import math
import struct

from .bits import BitSeq, PackedInts

INF = math.inf


class NotProper(ValueError):
    pass


def _endpoint_order(intervals):
    """Vertex order by left key and the merged endpoint bits."""
    keys = []
    for idx, (left, right, tie) in enumerate(intervals):
        if left > right:
            raise ValueError(f"interval {idx} has left {left} > right {right}")
        keys.append(((left, 0, tie), 1, idx))
        keys.append(((right, 1, tie), 0, idx))
    keys.sort()
    order = [idx for _, bit, idx in keys if bit]
    rights = [idx for _, bit, idx in keys if not bit]
    if order != rights:
        raise NotProper("an interval strictly contains another after tie-breaking")
    return order, [bit for _, bit, _ in keys]


class ProperIntervalOracle:
    def __init__(self, ebits, stride=None):
        self.E = BitSeq.from_bits(ebits)
        self.n = n = self.E.ones
        if stride is None:
            stride = max(1, math.ceil(math.log2(n))) if n > 1 else 1
        self.stride = stride
        self._build_levels()

    # --- basic navigation --------------------------------------------------

    def reach(self, v):
        return self.E.rank1(self.E.select0(v))

    def back(self, v):
        return self.E.rank0(self.E.select1(v)) + 1

    def _check(self, v):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside [1..{self.n}]")

    def adjacent(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return False
        if u > v:
            u, v = v, u
        return self.reach(u) >= v

    def neighbor_range(self, v):
        """Inclusive vertex range of v's closed neighbourhood (v included)."""
        self._check(v)
        return self.back(v), self.reach(v)

    def neighbors(self, v):
        lo, hi = self.neighbor_range(v)
        return [w for w in range(lo, hi + 1) if w != v]

    def degree(self, v):
        lo, hi = self.neighbor_range(v)
        return hi - lo

    # --- levels and sampled preorder -----------------------------------------

    def _build_levels(self):
        n, K = self.n, self.stride
        reach = [0] * (n + 1)
        e = self.E
        lefts = 0
        for p in range(1, e.n + 1):
            if e.access(p):
                lefts += 1
            else:
                reach[e.rank0(p)] = lefts
        self._reach_table = reach  # construction only
        level_start = []
        comp_first = []
        sampled_levels = []
        sampled_vertex = []
        pre_regular = {}
        pre_boundary = []
        counter = 0
        s = 1
        while s <= n:
            # levels of the component starting at s, as (first, last) pairs
            levels = []
            first, last = s, s
            while True:
                levels.append((first, last))
                nxt = reach[last]
                if nxt == last:
                    break
                first, last = last + 1, nxt
            h = len(levels)
            base = len(level_start)
            for j, (a, _) in enumerate(levels):
                level_start.append(a)
                comp_first.append(j == 0)
            offsets = range(min(K, h))
            best = min(offsets, key=lambda o: sum(levels[j][1] - levels[j][0] + 1
                                                  for j in range(o, h, K)))
            chosen = list(range(best, h, K))
            marks = set(chosen)
            for j in range(h):
                sampled_levels.append(j in marks)
            for j in chosen:
                a, b = levels[j]
                sampled_vertex.extend(range(a, b + 1))
            counter = self._preorder(levels, chosen, reach, pre_regular, pre_boundary, counter)
            s = levels[-1][1] + 1
        self.levels = BitSeq.from_positions(n, level_start)
        self.comp_first = BitSeq.from_bits(comp_first)
        self.sampled_levels = BitSeq.from_bits(sampled_levels)
        self.sampled = BitSeq.from_positions(n, sampled_vertex)
        width = max(1, counter.bit_length())
        self.pre = PackedInts([pre_regular[v] for v in sorted(pre_regular)], width)
        self.bpre = PackedInts(pre_boundary, width)
        del self._reach_table

    @staticmethod
    def _preorder(levels, chosen, reach, pre_regular, pre_boundary, counter):
        """Number the contracted forest of one component in preorder."""
        # node = (vertex, layer index in `chosen`); layer j holds the boundary
        # vertex t_{level-1} (if any) followed by the level's own vertices
        layers = []
        for j, lev in enumerate(chosen):
            a, b = levels[lev]
            nodes = list(range(a, b + 1))
            if lev > 0:
                nodes.insert(0, levels[lev - 1][1])
            layers.append(nodes)
        children = {}
        for j in range(len(chosen) - 1):
            steps = chosen[j + 1] - chosen[j]
            for x in layers[j]:
                y = x
                for _ in range(steps):
                    y = reach[y]
                children.setdefault((y, j + 1), []).append(x)
        order = {}
        top = len(chosen) - 1
        stack = [(x, top) for x in reversed(layers[top])]
        while stack:
            x, j = stack.pop()
            order[(x, j)] = counter
            counter += 1
            for c in reversed(children.get((x, j), ())):
                stack.append((c, j - 1))
        for j, lev in enumerate(chosen):
            nodes = layers[j]
            if lev > 0:
                pre_boundary.append(order[(nodes[0], j)])
                nodes = nodes[1:]
            else:
                pre_boundary.append(0)
            for x in nodes:
                pre_regular[x] = order[(x, j)]
        return counter

    def level_of(self, v):
        return self.levels.rank1(v)

    def component_of(self, v):
        return self.comp_first.rank1(self.levels.rank1(v))

    # --- queries -------------------------------------------------------------

    def dist(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        if u > v:
            u, v = v, u
        reach = self.reach
        if reach(u) >= v:
            return 1
        lu, lv = self.levels.rank1(u), self.levels.rank1(v)
        cf = self.comp_first
        if cf.rank1(lu) != cf.rank1(lv):
            return INF
        delta = lv - lu
        sl = self.sampled_levels
        s1 = sl.select1(sl.rank1(lu - 1) + 1)
        k2 = sl.rank1(lv)
        s2 = sl.select1(k2) if k2 else None
        if s1 is None or s2 is None or s1 > s2:
            x = u
            for _ in range(delta):
                x = reach(x)
            return delta if x >= v else delta + 1
        x = u
        for _ in range(s1 - lu):
            x = reach(x)
        y = v
        back = self.back
        for _ in range(lv - s2):
            y = back(y)
        if self.levels.rank1(x) == s1:
            px = self.pre.get(self.sampled.rank1(x))
        else:
            px = self.bpre.get(sl.rank1(s1))
        py = self.pre.get(self.sampled.rank1(y))
        return delta if px >= py else delta + 1

    def spath_first(self, u, v):
        """Next vertex after u on a shortest path to v (greedy extremal jump)."""
        d = self.dist(u, v)
        if d == 0 or d == INF:
            raise ValueError(f"no first step from {u} to {v} (distance {d})")
        if u < v:
            r = self.reach(u)
            return v if r >= v else r
        b = self.back(u)
        return v if b <= v else b

    # --- space and serialization ---------------------------------------------

    def report_bits(self):
        return (self.E.report_bits() + self.levels.report_bits()
                + self.comp_first.report_bits() + self.sampled_levels.report_bits()
                + self.sampled.report_bits() + self.pre.report_bits()
                + self.bpre.report_bits() + 64)

    def to_bytes(self):
        parts = [struct.pack("<Q", self.stride)]
        for part in (self.E, self.levels, self.comp_first, self.sampled_levels,
                     self.sampled, self.pre, self.bpre):
            parts.append(part.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data, offset=0):
        obj = cls.__new__(cls)
        (obj.stride,) = struct.unpack_from("<Q", data, offset)
        offset += 8
        obj.E, offset = BitSeq.from_bytes(data, offset)
        obj.n = obj.E.ones
        obj.levels, offset = BitSeq.from_bytes(data, offset)
        obj.comp_first, offset = BitSeq.from_bytes(data, offset)
        obj.sampled_levels, offset = BitSeq.from_bytes(data, offset)
        obj.sampled, offset = BitSeq.from_bytes(data, offset)
        obj.pre, offset = PackedInts.from_bytes(data, offset)
        obj.bpre, offset = PackedInts.from_bytes(data, offset)
        return obj, offset


def build_from_intervals(intervals, stride=None):
    """Oracle over the intersection graph of ``(left, right, tiebreak)`` triples.

    Equal coordinates are ordered as if every left end were nudged down and
    every right end nudged up by a tiny amount proportional to the tiebreak,
    so touching intervals intersect and equal left ends order by tiebreak.
    The i-th smallest left end becomes vertex i; ``input_order`` of the result
    lists the input index of each vertex.
    """
    intervals = list(intervals)
    order, bits = _endpoint_order(intervals)
    oracle = ProperIntervalOracle(bits, stride)
    oracle.input_order = order
    return oracle
