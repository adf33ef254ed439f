"""Semi-local distance representation: two-coordinate labels plus O(n) bits.

Each vertex v is labelled with its grid point (v, Π[v]). Everything else the
queries need (the A/B bit vectors and the two interval-graph oracles) is in
the shared global part. Every query takes exactly two labels and the global
part, so no other label can be consulted; intermediate hops are always A or
B vertices, whose rows the bit vectors give back on their own.

Labels are stored as fixed 2⌈lg n⌉-bit records (x-1, y-1); n is kept in the
global part, so the records need no delimiter.
"""

import math
import struct
from collections import namedtuple

from .bits import PackedInts
from .core import check_permutation
from .pgraph import DistanceLayer, cascade

INF = math.inf
MAGIC = b"SSLG1"

VertexLabel = namedtuple("VertexLabel", "x y")


def label_width(n):
    """Bits per coordinate: ⌈lg n⌉, at least one."""
    return max(1, (n - 1).bit_length())


class GlobalPart:
    def __init__(self, layer):
        self.layer = layer
        self.n = layer.n

    def report_bits(self):
        return sum(self.layer.space_report().values()) + 64

    def to_bytes(self):
        return MAGIC + struct.pack("<Q", self.n) + self.layer.to_bytes()

    @classmethod
    def from_bytes(cls, data, offset=0):
        if data[offset:offset + 5] != MAGIC:
            raise ValueError("not a serialized global part")
        (n,) = struct.unpack_from("<Q", data, offset + 5)
        layer, offset = DistanceLayer.from_bytes(data, offset + 13)
        if layer.n != n:
            raise ValueError("global part header disagrees with its payload")
        return cls(layer), offset


def encode(pi_inv, pio_stride=None):
    """Labels (one per vertex, in id order) and the global part."""
    p = check_permutation(pi_inv)
    if not p:
        raise ValueError("graph needs at least one vertex")
    labels = [VertexLabel(v, y) for v, y in enumerate(p, 1)]
    return labels, GlobalPart(DistanceLayer(p, pio_stride))


def _check(lbl, glob):
    n = glob.n
    if not (1 <= lbl.x <= n and 1 <= lbl.y <= n):
        raise ValueError(f"label {tuple(lbl)} does not belong to a graph on {n} vertices")


def adjacent_labels(lu, lv):
    """Pure inversion test; needs no global data."""
    return (lu.x - lv.x) * (lu.y - lv.y) < 0


def distance_labels(lu, lv, glob):
    _check(lu, glob)
    _check(lv, glob)
    return cascade(glob.layer, lu.x, lu.y, lv.x, lv.y)[0]


def spath_first_labels(lu, lv, glob):
    """Label of the next hop from lu towards lv."""
    _check(lu, glob)
    _check(lv, glob)
    d, _, w = cascade(glob.layer, lu.x, lu.y, lv.x, lv.y)
    if d == 0 or d == INF:
        raise ValueError(f"no first step from {lu.x} to {lv.x} (distance {d})")
    if w == lv.x:
        return lv
    L = glob.layer
    y = L.y_of_a(w) if L.Ax.access(w) else L.y_of_b(w)
    return VertexLabel(w, y)


def spath_labels(lu, lv, glob):
    """Shortest path as a list of labels, from lu to lv."""
    if distance_labels(lu, lv, glob) == INF:
        raise ValueError(f"{lv.x} is unreachable from {lu.x}")
    path = [lu]
    while path[-1] != lv:
        path.append(spath_first_labels(path[-1], lv, glob))
    return path


def labels_to_bytes(labels, n):
    """Packed records of 2⌈lg n⌉ bits each."""
    w = label_width(n)
    flat = []
    for x, y in labels:
        flat += [x - 1, y - 1]
    return PackedInts(flat, w).to_bytes()


def labels_from_bytes(data, offset=0):
    packed, offset = PackedInts.from_bytes(data, offset)
    flat = packed.to_list()
    labels = [VertexLabel(flat[i] + 1, flat[i + 1] + 1) for i in range(0, len(flat), 2)]
    return labels, offset
