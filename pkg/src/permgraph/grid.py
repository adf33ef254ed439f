"""Permutation point set {(x, y_for_x(x))} as a wavelet matrix.

One bit sequence per level of the binary value decomposition; range counting
and reporting descend all levels at once, so both cost O(log n) per answer.
"""

import struct

from .bits import BitSeq, width_for


class PermGrid:
    def __init__(self, ys):
        ys = list(ys)
        self.n = n = len(ys)
        self.depth = depth = max(1, (n - 1).bit_length()) if n > 1 else 1
        levels, zeros = [], []
        cur = [y - 1 for y in ys]
        for lev in range(depth):
            shift = depth - 1 - lev
            bits = [y >> shift & 1 for y in cur]
            bs = BitSeq.from_bits(bits)
            levels.append(bs)
            zeros.append(n - bs.ones)
            cur = [y for y in cur if not y >> shift & 1] + [y for y in cur if y >> shift & 1]
        self.levels = levels
        self.zeros = zeros

    @classmethod
    def _from_levels(cls, n, levels):
        obj = cls.__new__(cls)
        obj.n = n
        obj.depth = len(levels)
        obj.levels = levels
        obj.zeros = [n - b.ones for b in levels]
        return obj

    def _check_x(self, x):
        if not 1 <= x <= self.n:
            raise IndexError(f"x={x} outside [1..{self.n}]")

    def y_for_x(self, x):
        self._check_x(x)
        p = x - 1
        y = 0
        for lev, bs in enumerate(self.levels):
            words = bs.words
            bit = words[p >> 6] >> (p & 63) & 1
            y = (y << 1) | bit
            if bit:
                p = self.zeros[lev] + bs.rank1(p)
            else:
                p = p - bs.rank1(p)
        return y + 1

    def x_for_y(self, y):
        if not 1 <= y <= self.n:
            raise IndexError(f"y={y} outside [1..{self.n}]")
        c = y - 1
        start = 0
        for lev, bs in enumerate(self.levels):
            if c >> (self.depth - 1 - lev) & 1:
                start = self.zeros[lev] + bs.rank1(start)
            else:
                start = start - bs.rank1(start)
        return self._lift(start) + 1

    def _lift(self, p):
        # map a 0-based bottom-level position back to the original index
        for lev in range(self.depth - 1, -1, -1):
            bs = self.levels[lev]
            z = self.zeros[lev]
            if p >= z:
                p = bs.select1(p - z + 1) - 1
            else:
                p = bs.select0(p + 1) - 1
        return p

    def _count_less(self, a, b, c):
        """Entries with value < c among 0-based positions [a, b)."""
        if c <= 0 or a >= b:
            return 0
        if c >= 1 << self.depth:
            return b - a
        total = 0
        for lev, bs in enumerate(self.levels):
            ra, rb = bs.rank1(a), bs.rank1(b)
            if c >> (self.depth - 1 - lev) & 1:
                total += (b - a) - (rb - ra)
                z = self.zeros[lev]
                a, b = z + ra, z + rb
            else:
                a, b = a - ra, b - rb
        return total

    def _clamp(self, x1, x2, y1, y2):
        n = self.n
        return max(1, x1), min(n, x2), max(1, y1), min(n, y2)

    def count(self, x1, x2, y1, y2):
        x1, x2, y1, y2 = self._clamp(x1, x2, y1, y2)
        if x1 > x2 or y1 > y2:
            return 0
        return self._count_less(x1 - 1, x2, y2) - self._count_less(x1 - 1, x2, y1 - 1)

    def report(self, x1, x2, y1, y2):
        """Points of the rectangle as (x, y) pairs sorted by x."""
        x1, x2, y1, y2 = self._clamp(x1, x2, y1, y2)
        if x1 > x2 or y1 > y2:
            return []
        lo, hi = y1 - 1, y2 - 1
        out = []
        depth = self.depth
        # (level, a, b, value prefix)
        stack = [(0, x1 - 1, x2, 0)]
        while stack:
            lev, a, b, pre = stack.pop()
            if a >= b:
                continue
            span = depth - lev
            low = pre << span
            high = low + (1 << span) - 1
            if high < lo or low > hi:
                continue
            if lev == depth:
                for p in range(a, b):
                    out.append((self._lift(p) + 1, pre + 1))
                continue
            bs = self.levels[lev]
            ra, rb = bs.rank1(a), bs.rank1(b)
            z = self.zeros[lev]
            stack.append((lev + 1, a - ra, b - rb, pre << 1))
            stack.append((lev + 1, z + ra, z + rb, pre << 1 | 1))
        out.sort()
        return out

    def report_bits(self):
        return sum(b.report_bits() for b in self.levels) + self.depth * width_for(self.n)

    def to_bytes(self):
        parts = [struct.pack("<QQ", self.n, self.depth)]
        parts += [b.to_bytes() for b in self.levels]
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data, offset=0):
        n, depth = struct.unpack_from("<QQ", data, offset)
        offset += 16
        levels = []
        for _ in range(depth):
            b, offset = BitSeq.from_bytes(data, offset)
            levels.append(b)
        return cls._from_levels(n, levels), offset
