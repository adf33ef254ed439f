"""Succinct ordered permutation graphs.

Two backends share the same bit-vector layer:

* ``array``: Π - 1 packed in n⌈lg n⌉ bits plus a range-max and a range-min index
  over it; neighbourhoods are reported by threshold iteration.
* ``grid``: Π lives only inside a wavelet grid; neighbourhoods are range
  reports and degrees are range counts.

A-vertices are prefix maxima of Π, B-vertices suffix minima. The bit vectors
Ax/Bx (by vertex) and Ay/By (by row) give the extremal A/B neighbours of every
vertex in O(1), and two proper interval graphs over A and B carry the
long-range distances:

    G_A: a in A gets interval [b_minus(a), b_plus(a)]
    G_B: b in B gets interval [a_minus(b), a_plus(b)]
"""

import math
import struct
from collections import namedtuple

from .bits import BitSeq, PackedInts, width_for
from .core import check_permutation
from .grid import PermGrid
from .pio import ProperIntervalOracle, build_from_intervals
from .rmq import RmqIndex

INF = math.inf
MAGIC = b"SPGR1"

Extremal = namedtuple("Extremal", "a_minus a_plus b_minus b_plus")


def _le(x, y):
    return x is not None and y is not None and x <= y


def _ge(x, y):
    return x is not None and y is not None and x >= y


def cascade(g, u, yu, v, yv):
    """Distance, deciding case and first step from u towards v.

    ``g`` supplies a_plus(x), b_minus(x), a_minus(x, y), b_plus(x, y),
    y_of_a(a), y_of_b(b), dist_a(a1, a2), dist_b(b1, b2) and isolated(x, y);
    ``yu``/``yv`` are the rows of u and v. Returns ``(d, case, witness)``.
    """
    if u == v:
        return 0, 0, None
    if (u - v) * (yu - yv) < 0:
        return 1, 1, v
    if g.isolated(u, yu) or g.isolated(v, yv):
        return INF, 4, None
    if u < v:
        # towards larger ids: max-side extremals of u, min-side of v
        sa, sb = g.a_plus(u), g.b_plus(u, yu)
        ta, tb = g.a_minus(v, yv), g.b_minus(v)
        reached = _le

        def sa_of(x):
            return g.a_plus(x)

        def sb_of_a(a):
            return g.b_plus(a, g.y_of_a(a))

        da, db = g.dist_a, g.dist_b
    else:
        # mirror image: A and B trade roles and the order flips
        sa, sb = g.b_minus(u), g.a_minus(u, yu)
        ta, tb = g.b_plus(v, yv), g.a_plus(v)
        reached = _ge

        def sa_of(x):
            return g.b_minus(x)

        def sb_of_a(b):
            return g.a_minus(b, g.y_of_b(b))

        da, db = g.dist_b, g.dist_a
    if reached(ta, sa):
        return 2, 2, sa
    if reached(tb, sb):
        return 2, 2, sb
    sa_sb = sa_of(sb) if sb is not None else None
    sb_sa = sb_of_a(sa) if sa is not None else None
    if reached(ta, sa_sb):
        return 3, 3, sb
    if reached(tb, sb_sa):
        return 3, 3, sa
    best, wit = INF, None
    for base, x, y, dist, w in ((2, sb, tb, db, sb), (3, sb_sa, tb, db, sa),
                                (2, sa, ta, da, sa), (3, sa_sb, ta, da, sb)):
        if x is None or y is None:
            continue
        d = dist(x, y)
        if d == INF:
            continue
        d = base + 2 * d
        if d < best:
            best, wit = d, w
    return best, 4, wit


class DistanceLayer:
    """A/B bit vectors and the G_A/G_B oracles of one permutation graph.

    Built from the rows ``p`` (a plain list, construction only); afterwards
    every method works from the bit vectors alone, except that a_minus and
    b_plus need the row of their argument.
    """

    def __init__(self, p, stride=None):
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
        ay, by = [0] * n, [0] * n
        for i, y in enumerate(p):
            ay[y - 1] = ax[i]
            by[y - 1] = bx[i]
        self.n = n
        self.Ax, self.Bx = BitSeq.from_bits(ax), BitSeq.from_bits(bx)
        self.Ay, self.By = BitSeq.from_bits(ay), BitSeq.from_bits(by)
        a_ivs = [(self.b_minus(a), self.b_plus(a, p[a - 1]), a) for a in self.Ax.ones_positions()]
        b_ivs = [(self.a_minus(b, p[b - 1]), self.a_plus(b), b) for b in self.Bx.ones_positions()]
        self.GA = build_from_intervals(a_ivs, stride)
        self.GB = build_from_intervals(b_ivs, stride)
        for o in (self.GA, self.GB):
            if o.input_order != list(range(len(o.input_order))):
                raise AssertionError("interval order disagrees with vertex order")

    def a_plus(self, v):
        return self.Ax.select1(self.Ax.rank1(v))

    def a_minus(self, v, y):
        return self.Ax.select1(self.Ay.rank1(y - 1) + 1)

    def b_plus(self, v, y):
        return self.Bx.select1(self.By.rank1(y))

    def b_minus(self, v):
        return self.Bx.select1(self.Bx.rank1(v - 1) + 1)

    def y_of_a(self, a):
        """Row of an A-vertex from the bit vectors alone."""
        return self.Ay.select1(self.Ax.rank1(a))

    def y_of_b(self, b):
        return self.By.select1(self.Bx.rank1(b))

    def isolated(self, v, y=None):
        return self.Ax.access(v) == 1 and self.Bx.access(v) == 1

    def dist_a(self, a1, a2):
        return self.GA.dist(self.Ax.rank1(a1), self.Ax.rank1(a2))

    def dist_b(self, b1, b2):
        return self.GB.dist(self.Bx.rank1(b1), self.Bx.rank1(b2))

    def space_report(self):
        parts = {name: getattr(self, name).report_bits() for name in ("Ax", "Bx", "Ay", "By")}
        parts["GA"] = self.GA.report_bits()
        parts["GB"] = self.GB.report_bits()
        return parts

    def to_bytes(self):
        parts = [getattr(self, name).to_bytes() for name in ("Ax", "Bx", "Ay", "By")]
        return b"".join(parts + [self.GA.to_bytes(), self.GB.to_bytes()])

    @classmethod
    def from_bytes(cls, data, offset=0):
        obj = cls.__new__(cls)
        for name in ("Ax", "Bx", "Ay", "By"):
            bs, offset = BitSeq.from_bytes(data, offset)
            setattr(obj, name, bs)
        obj.n = obj.Ax.n
        obj.GA, offset = ProperIntervalOracle.from_bytes(data, offset)
        obj.GB, offset = ProperIntervalOracle.from_bytes(data, offset)
        return obj, offset


class SuccinctPermGraph:
    def __init__(self, pi_inv, backend="array", eps=0.25, pio_stride=None):
        p = check_permutation(pi_inv)
        if not p:
            raise ValueError("graph needs at least one vertex")
        if backend not in ("array", "grid"):
            raise ValueError(f"unknown backend {backend!r}")
        self.n = len(p)
        self.backend = backend
        self.eps = eps
        self._set_pi(p)
        self.layer = DistanceLayer(p, pio_stride)
        self._expose_layer()

    def _expose_layer(self):
        L = self.layer
        self.Ax, self.Bx, self.Ay, self.By = L.Ax, L.Bx, L.Ay, L.By
        self.GA, self.GB = L.GA, L.GB
        self.y_of_a, self.y_of_b, self.isolated = L.y_of_a, L.y_of_b, L.isolated
        self.dist_a, self.dist_b = L.dist_a, L.dist_b

    def _set_pi(self, p, loaded=None):
        n = self.n
        if self.backend == "array":
            self.Pi = PackedInts([y - 1 for y in p], width_for(n - 1)) if loaded is None else loaded[0]
            self._bind_pi()
            if loaded is None:
                self.rmq_max = RmqIndex(self._pi, n, "max", self.eps)
                self.rmq_min = RmqIndex(self._pi, n, "min", self.eps)
            else:
                self.rmq_max, self.rmq_min = loaded[1], loaded[2]
        else:
            self.grid = PermGrid(p) if loaded is None else loaded[0]
            self._pi = self.grid.y_for_x

    def _bind_pi(self):
        words, width = self.Pi.words, self.Pi.width
        mask = (1 << width) - 1

        def pi(i):
            pos = (i - 1) * width
            w, off = pos >> 6, pos & 63
            val = words[w] >> off
            if off + width > 64:
                val |= words[w + 1] << (64 - off)
            return (val & mask) + 1
        self._pi = pi

    # --- basic access ---------------------------------------------------------

    def _check(self, v):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside [1..{self.n}]")

    def pi_inv(self, v):
        self._check(v)
        return self._pi(v)

    def adjacent(self, u, v):
        self._check(u)
        self._check(v)
        return (u - v) * (self._pi(u) - self._pi(v)) < 0

    # --- extremal neighbours ----------------------------------------------------

    def a_plus(self, v):
        return self.layer.a_plus(v)

    def a_minus(self, v, y=None):
        return self.layer.a_minus(v, self._pi(v) if y is None else y)

    def b_plus(self, v, y=None):
        return self.layer.b_plus(v, self._pi(v) if y is None else y)

    def b_minus(self, v):
        return self.layer.b_minus(v)

    def extremal(self, v):
        self._check(v)
        y = self._pi(v)
        return Extremal(self.a_minus(v, y), self.a_plus(v), self.b_minus(v), self.b_plus(v, y))

    def in_a(self, v):
        return self.Ax.access(v) == 1

    def in_b(self, v):
        return self.Bx.access(v) == 1

    # --- neighbourhoods --------------------------------------------------------

    def neighbors_minus(self, v):
        """Neighbours smaller than v (array backend: preorder iteration order)."""
        self._check(v)
        if v == 1:
            return
        y = self._pi(v)
        if self.backend == "grid":
            for x, _ in self.grid.report(1, v - 1, y + 1, self.n):
                yield x
            return
        yield from self.rmq_max.iterate(1, v - 1, y)

    def neighbors_plus(self, v):
        self._check(v)
        if v == self.n:
            return
        y = self._pi(v)
        if self.backend == "grid":
            for x, _ in self.grid.report(v + 1, self.n, 1, y - 1):
                yield x
            return
        yield from self.rmq_min.iterate(v + 1, self.n, y)

    def neighbors(self, v):
        yield from self.neighbors_minus(v)
        yield from self.neighbors_plus(v)

    def neighbors_minus_complement(self, v):
        """Non-neighbours smaller than v, i.e. N⁻ of the complement graph."""
        self._check(v)
        if v == 1:
            return
        y = self._pi(v)
        if self.backend == "grid":
            for x, _ in self.grid.report(1, v - 1, 1, y - 1):
                yield x
            return
        yield from self.rmq_min.iterate(1, v - 1, y)

    def _first_after(self, lo, hi, ylo, yhi, after):
        # grid backend: smallest x in [max(lo, after+1) .. hi] inside the rows
        g = self.grid
        lo = max(lo, after + 1)
        if lo > hi or g.count(lo, hi, ylo, yhi) == 0:
            return None
        while lo < hi:
            mid = (lo + hi) // 2
            if g.count(lo, mid, ylo, yhi):
                hi = mid
            else:
                lo = mid + 1
        return lo

    def next_neighbor(self, u, w=None):
        """Neighbour of u after w in iteration order (N⁻ first, then N⁺)."""
        self._check(u)
        n = self.n
        y = self._pi(u)
        if w is not None:
            self._check(w)
            if not self.adjacent(u, w):
                raise ValueError(f"{w} is not a neighbour of {u}")
        if self.backend == "grid":
            if w is None or w < u:
                x = self._first_after(1, u - 1, y + 1, n, w or 0)
                if x is not None:
                    return x
                w = u
            return self._first_after(u + 1, n, 1, y - 1, w)
        if w is None or w < u:
            if u > 1:
                if w is None:
                    x = self.rmq_max.first_geq(1, u - 1, y)
                else:
                    x = self.rmq_max.next_geq(1, u - 1, y, w)
                if x is not None:
                    return x
            if u == n:
                return None
            return self.rmq_min.first_leq(u + 1, n, y)
        return self.rmq_min.next_leq(u + 1, n, y, w)

    def degree(self, v):
        self._check(v)
        if self.backend == "grid":
            y = self._pi(v)
            return (self.grid.count(1, v - 1, y + 1, self.n)
                    + self.grid.count(v + 1, self.n, 1, y - 1))
        return sum(1 for _ in self.neighbors(v))

    # --- distances --------------------------------------------------------------

    def distance_case(self, u, v):
        """``(distance, case, first step)`` of the four-case cascade."""
        self._check(u)
        self._check(v)
        return cascade(self.layer, u, self._pi(u), v, self._pi(v))

    def distance(self, u, v):
        return self.distance_case(u, v)[0]

    def spath_first(self, u, v):
        d, _, w = self.distance_case(u, v)
        if d == 0 or d == INF:
            raise ValueError(f"no first step from {u} to {v} (distance {d})")
        return w

    def spath(self, u, v):
        d, _, w = self.distance_case(u, v)
        if d == INF:
            raise ValueError(f"{v} is unreachable from {u}")
        path = [u]
        while d:
            path.append(w)
            d, _, w = self.distance_case(w, v)
        return path

    # --- space and serialization --------------------------------------------------

    def space_report(self):
        parts = {}
        if self.backend == "array":
            parts["Pi"] = self.Pi.report_bits()
            parts["rmq_max"] = self.rmq_max.report_bits()
            parts["rmq_min"] = self.rmq_min.report_bits()
        else:
            parts["grid"] = self.grid.report_bits()
        parts.update(self.layer.space_report())
        parts["total"] = sum(parts.values())
        return parts

    def report_bits(self):
        return self.space_report()["total"]

    def to_bytes(self):
        tag = 0 if self.backend == "array" else 1
        parts = [MAGIC, struct.pack("<QBd", self.n, tag, self.eps)]
        if self.backend == "array":
            parts += [self.Pi.to_bytes(), self.rmq_max.to_bytes(), self.rmq_min.to_bytes()]
        else:
            parts.append(self.grid.to_bytes())
        parts.append(self.layer.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data, offset=0):
        if data[offset:offset + 5] != MAGIC:
            raise ValueError("not a serialized permutation graph")
        n, tag, eps = struct.unpack_from("<QBd", data, offset + 5)
        offset += 5 + struct.calcsize("<QBd")
        obj = cls.__new__(cls)
        obj.n, obj.eps = n, eps
        obj.backend = "array" if tag == 0 else "grid"
        if tag == 0:
            pi, offset = PackedInts.from_bytes(data, offset)
            obj.Pi = pi
            obj._bind_pi()
            rmax, offset = RmqIndex.from_bytes(data, offset, obj._pi)
            rmin, offset = RmqIndex.from_bytes(data, offset, obj._pi)
            obj._set_pi(None, (pi, rmax, rmin))
        else:
            grid, offset = PermGrid.from_bytes(data, offset)
            obj._set_pi(None, (grid,))
        obj.layer, offset = DistanceLayer.from_bytes(data, offset)
        obj._expose_layer()
        return obj, offset
