"""Circular permutation graphs through the thrice-unrolled graph G₃.

A circular permutation graph is a permutation Π together with a chord type
per vertex: ``N`` (normal), ``F`` (forward, wraps once upwards) or ``B``
(backward). Vertex v contributes up to three points to a 3n x 3n grid:

    copy    x        y (N)      y (F)      y (B)
    left    v        Π[v]       Π[v]+n     -
    centre  v+n      Π[v]+n     Π[v]+2n    Π[v]
    right   v+2n     Π[v]+2n    -          Π[v]+n

The permutation graph G₃ of these points is never stored. A range-max and a
range-min index run over its virtual y-sequence of length 3n, with missing
columns reading as 0 (resp. 3n+1) so they never reach a threshold. Distances
use a DistanceLayer built on G₃ after compressing away empty rows and
columns.
"""

import math
import random
import struct
from collections import namedtuple

from .bits import BitSeq, PackedInts, width_for
from .core import ReferenceGraph, check_permutation
from .pgraph import DistanceLayer, cascade
from .rmq import RmqIndex

INF = math.inf
MAGIC = b"SCPG1"
COPIES = ("left", "center", "right")
_SHIFT = {"N": 0, "F": 1, "B": -1}

Violation = namedtuple("Violation", "u v rule")


class InvalidChordTypes(ValueError):
    def __init__(self, violation):
        self.violation = violation
        u, v, rule = violation
        super().__init__(f"chords {u} and {v} form forbidden configuration {rule}")


def _norm_types(types, n):
    types = "".join(types).upper()
    if len(types) != n:
        raise ValueError(f"{len(types)} chord types for {n} vertices")
    bad = set(types) - set("NFB")
    if bad:
        raise ValueError(f"unknown chord type(s) {''.join(sorted(bad))}")
    return types


def _violations(p, types):
    # one left-to-right pass with per-type prefix extrema; every position
    # that conflicts with its prefix yields one witness pair
    max_f = max_n = (0, None)
    min_f = min_b = (len(p) + 1, None)
    for v, (y, t) in enumerate(zip(p, types), 1):
        if t == "N":
            if max_f[0] > y:
                yield Violation(max_f[1], v, 1)
            if y > max_n[0]:
                max_n = (y, v)
        elif t == "B":
            if max_n[0] > y:
                yield Violation(max_n[1], v, 2)
            elif min_f[0] < y:
                yield Violation(min_f[1], v, 3)
            if y < min_b[0]:
                min_b = (y, v)
        else:
            if min_b[0] < y:
                yield Violation(min_b[1], v, 3)
            if y > max_f[0]:
                max_f = (y, v)
            if y < min_f[0]:
                min_f = (y, v)


def validate(pi_inv, types):
    """First forbidden pair (smallest v, then rule order) or None.

    Rules for u < v: (1) inversion with t(u)=F, t(v)=N; (2) inversion with
    t(u)=N, t(v)=B; (3) non-inversion where t(u), t(v) are F and B in either
    order. A pair violates a rule iff v conflicts with the extreme earlier
    chord of the relevant type, so one O(n) pass suffices.
    """
    p = check_permutation(pi_inv)
    return next(_violations(p, _norm_types(types, len(p))), None)


def random_valid_types(pi_inv, rng=None, p_forward=0.2, p_backward=0.2):
    """Random chord types for ``pi_inv`` that pass validate().

    Types are drawn independently; then every pass over the sequence turns
    the non-N chord of each reported violation back into N, until a pass
    finds nothing. All-N is always valid, so this terminates.
    """
    rng = rng or random
    p = check_permutation(pi_inv)
    t = []
    for _ in range(len(p)):
        r = rng.random()
        t.append("F" if r < p_forward else "B" if r < p_forward + p_backward else "N")
    while True:
        demote = set()
        for u, v, rule in _violations(p, t):
            if rule == 1:
                demote.add(u)
            elif rule == 2:
                demote.add(v)
            else:
                demote.add(rng.choice((u, v)))
        if not demote:
            return "".join(t)
        for x in demote:
            t[x - 1] = "N"


def copy_y(y, t, k, n):
    """Row of copy k (0 left, 1 centre, 2 right) of a vertex with Π-value y."""
    j = k + _SHIFT[t]
    if 0 <= j <= 2:
        return y + j * n
    return None


def g3_points(pi_inv, types):
    """All points (x, y) of G₃ in the 3n x 3n grid, sorted by x."""
    p = check_permutation(pi_inv)
    n = len(p)
    types = _norm_types(types, n)
    pts = []
    for k in range(3):
        for v in range(1, n + 1):
            y = copy_y(p[v - 1], types[v - 1], k, n)
            if y is not None:
                pts.append((v + k * n, y))
    return pts


def _vertex(x, n):
    return (x - 1) % n + 1


def build_reference(pi_inv, types):
    """O(n²) graph from the pairwise rule: u < v are adjacent iff
    y(c_u) > y(c_v), y(l_v) > y(c_u) or y(c_v) > y(r_u)."""
    p = check_permutation(pi_inv)
    n = len(p)
    types = _norm_types(types, n)
    ys = [[copy_y(p[v], types[v], k, n) for k in range(3)] for v in range(n)]

    def gt(a, b):
        return a is not None and b is not None and a > b

    g = ReferenceGraph(n)
    for u in range(n):
        lu, cu, ru = ys[u]
        for v in range(u + 1, n):
            lv, cv, rv = ys[v]
            if gt(cu, cv) or gt(lv, cu) or gt(cv, ru):
                g.add_edge(u + 1, v + 1)
    return g


def build_reference_g3(pi_inv, types):
    """O(n²) graph from G₃: union of all copy-to-copy inversions."""
    pts = g3_points(pi_inv, types)
    n = len(pi_inv)
    g = ReferenceGraph(n)
    for i, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[i + 1:]:
            if y1 > y2:
                a, b = _vertex(x1, n), _vertex(x2, n)
                if a == b:
                    raise AssertionError(f"copies of vertex {a} cross in G₃")
                g.add_edge(a, b)
    return g


class CircularPermGraph:
    def __init__(self, pi_inv, types, eps=0.25, pio_stride=None):
        p = check_permutation(pi_inv)
        if not p:
            raise ValueError("graph needs at least one vertex")
        types = _norm_types(types, len(p))
        bad = validate(p, types)
        if bad is not None:
            raise InvalidChordTypes(bad)
        self.n = n = len(p)
        self.eps = eps
        self.Pi = PackedInts([y - 1 for y in p], width_for(n - 1))
        self.isF = BitSeq.from_bits([t == "F" for t in types])
        self.isB = BitSeq.from_bits([t == "B" for t in types])
        pts = g3_points(p, types)
        self.Cx = BitSeq.from_positions(3 * n, [x for x, _ in pts])
        self.Ry = BitSeq.from_positions(3 * n, sorted(y for _, y in pts))
        self._bind()
        self.rmq_max = RmqIndex(self._ymax, 3 * n, "max", eps)
        self.rmq_min = RmqIndex(self._ymin, 3 * n, "min", eps)
        self.layer = DistanceLayer([self.Ry.rank1(y) for _, y in pts], pio_stride)

    def _bind(self):
        n = self.n
        get, isF, isB = self.Pi.get, self.isF, self.isB
        hi = 3 * n + 1

        def y_at(x):
            v = (x - 1) % n + 1
            j = (x - 1) // n
            if isF.access(v):
                j += 1
            elif isB.access(v):
                j -= 1
            if 0 <= j <= 2:
                return get(v) + 1 + j * n
            return None

        def ymax(x):
            y = y_at(x)
            return 0 if y is None else y

        def ymin(x):
            y = y_at(x)
            return hi if y is None else y

        self._y_at, self._ymax, self._ymin = y_at, ymax, ymin

    # --- basic access -----------------------------------------------------------

    def _check(self, v):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside [1..{self.n}]")

    def pi_inv(self, v):
        self._check(v)
        return self.Pi.get(v) + 1

    def chord_type(self, v):
        self._check(v)
        if self.isF.access(v):
            return "F"
        return "B" if self.isB.access(v) else "N"

    def types(self):
        return "".join(self.chord_type(v) for v in range(1, self.n + 1))

    def y_coord(self, copy, v):
        """Row of copy ``left``/``center``/``right`` of v, None if absent."""
        self._check(v)
        return self._y_at(v + COPIES.index(copy) * self.n)

    def point_count(self):
        return self.Cx.ones

    def adjacent(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return False
        if u > v:
            u, v = v, u
        n, y = self.n, self._y_at
        cu, cv = y(u + n), y(v + n)
        if cu > cv:
            return True
        lv = y(v)
        if lv is not None and lv > cu:
            return True
        ru = y(u + 2 * n)
        return ru is not None and cv > ru

    # --- neighbourhoods ---------------------------------------------------------

    def neighbors(self, v):
        """N(v), read off the G₃ neighbourhood of the centre copy c_v."""
        self._check(v)
        n = self.n
        xc = v + n
        yc = self._y_at(xc)
        seen = set()
        for x in self.rmq_max.iterate(1, xc - 1, yc):
            w = (x - 1) % n + 1
            if w not in seen:
                seen.add(w)
                yield w
        for x in self.rmq_min.iterate(xc + 1, 3 * n, yc):
            w = (x - 1) % n + 1
            if w not in seen:
                seen.add(w)
                yield w

    def degree(self, v):
        return sum(1 for _ in self.neighbors(v))

    # --- distances ----------------------------------------------------------------

    def _copies(self, v):
        # compressed G₃ ids and rows of the copies of v that exist
        out = []
        for k in range(3):
            x = v + k * self.n
            y = self._y_at(x)
            if y is not None:
                out.append((self.Cx.rank1(x), self.Ry.rank1(y)))
        return out

    def _row3(self, i):
        return self.Ry.rank1(self._y_at(self.Cx.select1(i)))

    def _best(self, u, v):
        best = (INF, None, None)
        for i, yi in self._copies(u):
            for j, yj in self._copies(v):
                d = cascade(self.layer, i, yi, j, yj)[0]
                if d < best[0]:
                    best = (d, i, j)
        return best

    def distance(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        return self._best(u, v)[0]

    def spath(self, u, v):
        """A shortest u-v path, walked in G₃ between the closest copies."""
        self._check(u)
        self._check(v)
        if u == v:
            return [u]
        d, i, j = self._best(u, v)
        if d == INF:
            raise ValueError(f"{v} is unreachable from {u}")
        n = self.n
        yj = self._row3(j)
        path = [u]
        x = i
        while x != j:
            x = cascade(self.layer, x, self._row3(x), j, yj)[2]
            path.append(_vertex(self.Cx.select1(x), n))
        return path

    def spath_first(self, u, v):
        d = self.distance(u, v)
        if d == 0 or d == INF:
            raise ValueError(f"no first step from {u} to {v} (distance {d})")
        return self.spath(u, v)[1] if d > 1 else v

    # --- space and serialization -----------------------------------------------------

    def space_report(self):
        parts = {"Pi": self.Pi.report_bits(), "types": self.isF.report_bits() + self.isB.report_bits(),
                 "Cx": self.Cx.report_bits(), "Ry": self.Ry.report_bits(),
                 "rmq_max": self.rmq_max.report_bits(), "rmq_min": self.rmq_min.report_bits()}
        parts.update(self.layer.space_report())
        parts["total"] = sum(parts.values())
        return parts

    def report_bits(self):
        return self.space_report()["total"]

    def to_bytes(self):
        parts = [MAGIC, struct.pack("<Qd", self.n, self.eps)]
        for part in (self.Pi, self.isF, self.isB, self.Cx, self.Ry,
                     self.rmq_max, self.rmq_min, self.layer):
            parts.append(part.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data, offset=0):
        if data[offset:offset + 5] != MAGIC:
            raise ValueError("not a serialized circular permutation graph")
        obj = cls.__new__(cls)
        obj.n, obj.eps = struct.unpack_from("<Qd", data, offset + 5)
        offset += 5 + struct.calcsize("<Qd")
        obj.Pi, offset = PackedInts.from_bytes(data, offset)
        for name in ("isF", "isB", "Cx", "Ry"):
            bs, offset = BitSeq.from_bytes(data, offset)
            setattr(obj, name, bs)
        obj._bind()
        obj.rmq_max, offset = RmqIndex.from_bytes(data, offset, obj._ymax)
        obj.rmq_min, offset = RmqIndex.from_bytes(data, offset, obj._ymin)
        obj.layer, offset = DistanceLayer.from_bytes(data, offset)
        return obj, offset
