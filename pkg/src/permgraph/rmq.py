"""Range-maximum / range-minimum index over a virtual value sequence.

The values are never stored: the index only keeps a succinct tree over block
maxima and calls ``value_at(i)`` (1-based) when it has to look inside a block.

Block tree layout. Blocks of ``c = ceil(1/eps)`` positions are summarised by
their maxima; the Cartesian tree of those maxima (leftmost maximum wins ties)
is stored as the balanced-parentheses sequence of its first-child /
next-sibling forest, wrapped in a virtual root. Under that encoding the
preorder of the binary tree is the order of opening parentheses and the
inorder (= block index) is the order of closing parentheses, so every
navigation step reduces to rank/select and excess searches on one bit
sequence.

Threshold iteration. ``first_geq(l, r, y)`` returns the range maximum if it
reaches ``y``; ``next_geq(l, r, y, i)`` continues from any reported ``i``
without other state: remaining indices of i's block are checked first, then
the preorder walk over the block tree resumes, skipping subtrees whose block
maximum is below ``y`` and jumping back into ``[l, r]`` through LCA queries.
The range maximum is reported first and skipped at its regular slot.
"""

import math
import struct

from .bits import BitSeq, width_for

NEG_INF = -math.inf
POS_INF = math.inf


def _byte_tables():
    delta, minpref, sufmin = [], [], []
    for b in range(256):
        e, lo = 0, 9
        for j in range(8):
            e += 1 if b >> j & 1 else -1
            lo = min(lo, e)
        delta.append(e)
        minpref.append(lo)
        # values E(P+j) - E(P+8) for j = 0..7
        s, lo = 0, 9
        for j in range(7, -1, -1):
            s -= 1 if b >> j & 1 else -1
            lo = min(lo, s)
        sufmin.append(lo)
    return delta, minpref, sufmin


_DELTA, _MINPREF, _SUFMIN = _byte_tables()


class BPTree:
    """Balanced parentheses with excess searches backed by a min-tree over words.

    ``E(p)`` is the excess (opens minus closes) of positions ``1..p``; ``E(0) = 0``.
    """

    def __init__(self, bits):
        self.bp = bits
        self.L = bits.n
        nwords = (self.L + 63) >> 6
        size = 1
        while size < max(1, nwords):
            size <<= 1
        self._size = size
        tree = [POS_INF] * (2 * size)
        e = 0
        words = bits.words
        for w in range(nwords):
            word = words[w]
            lo = POS_INF
            for k in range(min(64, self.L - 64 * w)):
                e += 1 if word >> k & 1 else -1
                if e < lo:
                    lo = e
            tree[size + w] = lo
        for i in range(size - 1, 0, -1):
            a, b = tree[2 * i], tree[2 * i + 1]
            tree[i] = a if a < b else b
        self._tree = tree

    def excess(self, p):
        return 2 * self.bp.rank1(p) - p

    def report_bits(self):
        used = 2 * ((self.L + 63) >> 6)
        return self.bp.report_bits() + used * width_for(self.L)

    # --- word-level min tree -------------------------------------------------

    def _first_word(self, w, t):
        """Smallest word index >= w whose min excess is <= t, or None."""
        tree, size = self._tree, self._size
        if w >= size:
            return None
        i = size + w
        if tree[i] <= t:
            return w
        while True:
            if i & 1 == 0 and tree[i + 1] <= t:
                i += 1
                break
            i >>= 1
            if i <= 1:
                return None
        while i < size:
            i <<= 1
            if tree[i] > t:
                i += 1
        return i - size

    def _last_word(self, w, t):
        """Largest word index <= w whose min excess is <= t, or None."""
        tree, size = self._tree, self._size
        if w < 0:
            return None
        i = size + w
        if tree[i] <= t:
            return w
        while True:
            if i & 1 == 1 and tree[i - 1] <= t:
                i -= 1
                break
            i >>= 1
            if i <= 1:
                return None
        while i < size:
            i = 2 * i + 1
            if tree[i] > t:
                i -= 1
        return i - size

    def _range_min_words(self, w1, w2):
        tree, size = self._tree, self._size
        lo = POS_INF
        a, b = w1 + size, w2 + size + 1
        while a < b:
            if a & 1:
                if tree[a] < lo:
                    lo = tree[a]
                a += 1
            if b & 1:
                b -= 1
                if tree[b] < lo:
                    lo = tree[b]
            a >>= 1
            b >>= 1
        return lo

    # --- excess searches -----------------------------------------------------

    def fwd(self, p, t):
        """Smallest q > p with E(q) <= t, or None."""
        return self.fwd_rel(p, t - (2 * self.bp.rank1(p) - p))

    def fwd_rel(self, p, d):
        """Smallest q > p with E(q) - E(p) <= d (d < 0), or None."""
        L = self.L
        words = self.bp.words
        pos = p
        e = 0
        w = pos >> 6
        word = words[w] >> (pos & 63)
        end = 64 * w + 64
        if end > L:
            end = L
        while pos < end and pos & 7:
            pos += 1
            e += 1 if word & 1 else -1
            if e <= d:
                return pos
            word >>= 1
        while pos < end:
            byte = word & 255
            if e + _MINPREF[byte] <= d:
                for _ in range(8):
                    pos += 1
                    e += 1 if byte & 1 else -1
                    if e <= d:
                        return pos if pos <= L else None
                    byte >>= 1
            e += _DELTA[byte]
            pos += 8
            word >>= 8
        t = d + 2 * self.bp.rank1(p) - p
        w = self._first_word(w + 1, t)
        if w is None:
            return None
        pos = 64 * w
        return self.fwd_rel(pos, t - (2 * self.bp.rank1(pos) - pos))

    def bwd(self, q, t):
        """Largest p < q (p >= 0) with E(p) <= t, or None."""
        return self.bwd_rel(q, t - (2 * self.bp.rank1(q) - q))

    def bwd_rel(self, q, d):
        """Largest p < q with E(p) - E(q) <= d, or None."""
        if q <= 0:
            return None
        lowest = 64 * ((q - 1) >> 6)
        hit = self._scan_back(q, 0, lowest, d)
        if hit is not None:
            return hit
        t = d + 2 * self.bp.rank1(q) - q
        if lowest == 0:
            return None
        w = self._last_word((lowest >> 6) - 1, t)
        if w is None:
            return 0 if t >= 0 else None
        pos = 64 * w + 64
        e = 2 * self.bp.rank1(pos) - pos
        if e <= t:
            return pos
        return self._scan_back(pos, e, 64 * w, t)

    def _scan_back(self, pos, e, lowest, t):
        # E(pos) == e is already known; look at E(pos-1) .. E(lowest)
        words = self.bp.words
        while pos > lowest:
            if pos & 7 == 0 and pos - 8 >= lowest:
                byte = words[(pos - 8) >> 6] >> ((pos - 8) & 63) & 255
                if e + _SUFMIN[byte] > t:
                    e -= _DELTA[byte]
                    pos -= 8
                    continue
            e -= 1 if words[(pos - 1) >> 6] >> ((pos - 1) & 63) & 1 else -1
            pos -= 1
            if e <= t:
                return pos
        return None

    def _scan_min(self, pos, e, stop):
        # min of E(pos+1..stop), given E(pos) == e
        words = self.bp.words
        lo = POS_INF
        while pos < stop:
            if pos & 7 == 0 and pos + 8 <= stop:
                byte = words[pos >> 6] >> (pos & 63) & 255
                m = e + _MINPREF[byte]
                if m < lo:
                    lo = m
                e += _DELTA[byte]
                pos += 8
                continue
            e += 1 if words[pos >> 6] >> (pos & 63) & 1 else -1
            pos += 1
            if e < lo:
                lo = e
        return lo

    def range_min(self, a, b):
        """Minimum excess over positions a..b (1 <= a <= b <= L)."""
        rank1 = self.bp.rank1
        wa, wb = (a - 1) >> 6, (b - 1) >> 6
        if wa == wb:
            return self._scan_min(a - 1, 2 * rank1(a - 1) - a + 1, b)
        lo = self._scan_min(a - 1, 2 * rank1(a - 1) - a + 1, 64 * wa + 64)
        if wb - wa > 1:
            m = self._range_min_words(wa + 1, wb - 1)
            if m < lo:
                lo = m
        pos = 64 * wb
        m = self._scan_min(pos, 2 * rank1(pos) - pos, b)
        return m if m < lo else lo

    def leftmost_min(self, a, b):
        """Leftmost position of the minimum excess in a..b."""
        m = self.range_min(a, b)
        return self.fwd(a - 1, m)

    # --- tree navigation -----------------------------------------------------

    def findclose(self, p):
        return self.fwd_rel(p, -1)

    def findopen(self, q):
        return self.bwd_rel(q, 0) + 1

    def enclose_close(self, p):
        """Closing parenthesis of the parent of the node opened at p."""
        return self.fwd_rel(p, -2)

    def next_open(self, p):
        """First opening parenthesis after position p, or None."""
        if p < self.L:
            word = self.bp.words[p >> 6] >> (p & 63)
            if word:
                return p + (word & -word).bit_length()
        return self.bp.select1(self.bp.rank1(p) + 1)


def cartesian_bp(values):
    """Balanced parentheses of the first-child/next-sibling forest of the
    leftmost-max Cartesian tree of ``values`` (0-based list), wrapped in a
    virtual root. Returns a list of bits (1 = open)."""
    m = len(values)
    left = [-1] * m
    right = [-1] * m
    stack = []
    for x in range(m):
        last = -1
        while stack and values[stack[-1]] < values[x]:
            last = stack.pop()
        left[x] = last
        if stack:
            right[stack[-1]] = x
        stack.append(x)
    root = stack[0] if stack else -1
    out = [1]
    # emit(y) = '(' emit(left y) ')' emit(right y)
    todo = [("node", root)]
    while todo:
        kind, y = todo.pop()
        if kind == "close":
            out.append(0)
            continue
        if y < 0:
            continue
        out.append(1)
        todo.append(("node", right[y]))
        todo.append(("close", y))
        todo.append(("node", left[y]))
    out.append(0)
    return out


class RmqIndex:
    """Range-max (``mode='max'``) or range-min (``mode='min'``) index.

    Ties are broken towards the leftmost index. ``value_at`` may return
    ``math.inf`` / ``-math.inf`` as sentinels.
    """

    def __init__(self, value_at, n, mode="max", eps=0.25, count_probes=False):
        if mode not in ("max", "min"):
            raise ValueError("mode must be 'max' or 'min'")
        if n < 1:
            raise ValueError("empty sequence")
        self.n = n
        self.mode = mode
        self.eps = eps
        self.c = c = max(1, math.ceil(1 / eps))
        self.probes = 0
        raw = value_at
        if count_probes:
            def probe(i):
                self.probes += 1
                return raw(i)
        else:
            probe = raw
        if mode == "max":
            self._val = probe
        else:
            self._val = lambda i: -probe(i)
        self.m = m = (n + c - 1) // c
        maxima = []
        for b in range(m):
            lo = b * c + 1
            best = self._val(lo)
            for i in range(lo + 1, min(lo + c, n + 1)):
                v = self._val(i)
                if v > best:
                    best = v
            maxima.append(best)
        self.probes = 0
        self.tree = BPTree(BitSeq.from_bits(cartesian_bp(maxima)))

    # --- helpers ---------------------------------------------------------

    def _key(self, y):
        return y if self.mode == "max" else -y

    def _block(self, i):
        return (i - 1) // self.c + 1

    def _check(self, l, r):
        if not 1 <= l <= r <= self.n:
            raise IndexError(f"invalid range [{l}..{r}] for length {self.n}")

    def _scan_best(self, lo, hi):
        val = self._val
        best_i, best = lo, val(lo)
        for i in range(lo + 1, hi + 1):
            v = val(i)
            if v > best:
                best_i, best = i, v
        return best_i, best

    def _lca(self, b1, b2):
        t = self.tree
        bp = t.bp
        pos = t.leftmost_min(bp.select0(b1), bp.select0(b2))
        return bp.rank0(pos)

    def report_bits(self):
        return self.tree.report_bits()

    def to_bytes(self):
        head = struct.pack("<QQB", self.n, self.c, 0 if self.mode == "max" else 1)
        return head + self.tree.bp.to_bytes()

    @classmethod
    def from_bytes(cls, data, offset, value_at):
        """Rebuild around ``value_at``; returns ``(index, next_offset)``."""
        n, c, mode = struct.unpack_from("<QQB", data, offset)
        bp, offset = BitSeq.from_bytes(data, offset + 17)
        obj = cls.__new__(cls)
        obj.n, obj.c, obj.m = n, c, (n + c - 1) // c
        obj.eps = 1 / c
        obj.mode = "max" if mode == 0 else "min"
        obj.probes = 0
        obj._val = value_at if mode == 0 else (lambda i: -value_at(i))
        obj.tree = BPTree(bp)
        return obj, offset

    # --- range queries ---------------------------------------------------

    def _argbest(self, l, r):
        self._check(l, r)
        c = self.c
        bl, br = self._block(l), self._block(r)
        if bl == br:
            return self._scan_best(l, r)[0]
        # whole blocks go to the tree, partial end blocks are scanned
        fl = bl if l == (bl - 1) * c + 1 else bl + 1
        fr = br if r == min(br * c, self.n) else br - 1
        best_i, best = None, None
        if fl > bl:
            best_i, best = self._scan_best(l, bl * c)
        if fl <= fr:
            b = self._lca(fl, fr)
            i, v = self._scan_best((b - 1) * c + 1, min(b * c, self.n))
            if best_i is None or v > best:
                best_i, best = i, v
        if fr < br:
            i, v = self._scan_best((br - 1) * c + 1, r)
            if v > best:
                best_i = i
        return best_i

    def range_argmax(self, l, r):
        self._need("max")
        return self._argbest(l, r)

    def range_argmin(self, l, r):
        self._need("min")
        return self._argbest(l, r)

    def _need(self, mode):
        if self.mode != mode:
            raise TypeError(f"this index answers range-{self.mode} queries")

    # --- threshold iteration ----------------------------------------------

    def context(self, l, r):
        """Per-range data shared by all steps of one iteration:
        ``(first_index, root_block, root_open, root_end)``."""
        self._check(l, r)
        c, n = self.c, self.n
        bl, br = self._block(l), self._block(r)
        R = self._lca(bl, br) if bl < br else bl
        t = self.tree
        ro = t.findopen(t.bp.select0(R))
        rend = t.enclose_close(ro)
        return self._argbest(l, r), R, ro, rend

    def _first(self, l, r, y):
        i0 = self._argbest(l, r)
        return i0 if self._val(i0) >= self._key(y) else None

    def _next(self, l, r, y, i, ctx=None):
        if ctx is None:
            ctx = self.context(l, r)
        i0, R, ro, rend = ctx
        y = self._key(y)
        val, c, n = self._val, self.c, self.n
        t = self.tree
        bp = t.bp
        if i == i0:
            so = ro
        else:
            b = (i - 1) // c + 1
            for j in range(i + 1, min(b * c, r) + 1):
                if j != i0 and val(j) >= y:
                    return j
            so = t.next_open(t.findopen(bp.select0(b)))
        bl, br = (l - 1) // c + 1, (r - 1) // c + 1
        while True:
            if so is None or so >= rend:
                return None
            s = bp.rank0(t.findclose(so))
            if s < bl or s > br:
                stop = t.enclose_close(so)
                lo = bp.rank0(so) + 1
                hi = bp.rank0(stop) - 1
                if hi < bl or lo > br:
                    so = t.next_open(stop)
                    continue
                s = self._lca(max(lo, bl), min(hi, br))
                so = t.findopen(bp.select0(s))
            start = (s - 1) * c + 1
            stop_i = min(s * c, n)
            reach = False
            for j in range(start, stop_i + 1):
                v = val(j)
                if v >= y:
                    if l <= j <= r and j != i0:
                        return j
                    reach = True
            if reach:
                so = t.next_open(so)
            else:
                so = t.next_open(t.enclose_close(so))

    def first_geq(self, l, r, y):
        self._need("max")
        return self._first(l, r, y)

    def next_geq(self, l, r, y, i, ctx=None):
        self._need("max")
        return self._next(l, r, y, i, ctx)

    def first_leq(self, l, r, y):
        self._need("min")
        return self._first(l, r, y)

    def next_leq(self, l, r, y, i, ctx=None):
        self._need("min")
        return self._next(l, r, y, i, ctx)

    def iterate(self, l, r, y):
        """All indices of [l..r] whose value reaches ``y`` (>= for max,
        <= for min), in the same order as first/next, keeping the current
        tree node as the only state."""
        i0, R, so, rend = self.context(l, r)
        y = self._key(y)
        if self._val(i0) < y:
            return
        yield i0
        val, c, n = self._val, self.c, self.n
        t = self.tree
        bp = t.bp
        rank0, select0 = bp.rank0, bp.select0
        findclose, findopen = t.findclose, t.findopen
        enclose, next_open = t.enclose_close, t.next_open
        bl, br = (l - 1) // c + 1, (r - 1) // c + 1
        s = R
        while True:
            if s is None:
                if so is None or so >= rend:
                    return
                s = rank0(findclose(so))
            if s < bl or s > br:
                stop = enclose(so)
                lo = rank0(so) + 1
                hi = rank0(stop) - 1
                if hi < bl or lo > br:
                    so, s = next_open(stop), None
                    continue
                s = self._lca(max(lo, bl), min(hi, br))
                so = findopen(select0(s))
            start = (s - 1) * c + 1
            reach = False
            for j in range(start, min(s * c, n) + 1):
                if val(j) >= y:
                    reach = True
                    if l <= j <= r and j != i0:
                        yield j
            so = next_open(so) if reach else next_open(enclose(so))
            s = None
