"""Plain bit sequences with rank/select, and fixed-width packed integer arrays.

Positions are 1-based. ``rank1(i)`` counts ones in ``[1..i]`` and
``select1(k)`` returns the position of the k-th one (``None`` when there are
fewer than k ones). Storage is a list of 64-bit words plus a two-level rank
directory (superblocks of 512 bits, words of 64 bits) and sampled select
hints. ``report_bits`` returns the size of exactly that layout.
"""

import struct

WORD = 64
SUPER = 512
WORDS_PER_SUPER = SUPER // WORD
SAMPLE = 512

_MASK64 = (1 << 64) - 1


def _byte_select_table():
    table = []
    for b in range(256):
        row = [0]
        for pos in range(8):
            if b >> pos & 1:
                row.append(pos)
        table.append(row)
    return table


_SEL8 = _byte_select_table()
_POP8 = [len(row) - 1 for row in _SEL8]


def _select_in_word(word, k):
    """0-based offset of the k-th (1-based) set bit of ``word``."""
    base = 0
    while True:
        byte = word & 0xFF
        c = _POP8[byte]
        if k <= c:
            return base + _SEL8[byte][k]
        k -= c
        word >>= 8
        base += 8


def width_for(n):
    """Bits needed to store integers in ``[0..n]``."""
    return max(1, int(n).bit_length())


class BitSeq:
    """Immutable bit sequence with constant-time access and rank, fast select."""

    __slots__ = ("n", "words", "ones", "_sb", "_blk", "_s1", "_s0")

    def __init__(self, n, words):
        self.n = n
        nwords = n // WORD + 1
        words = list(words)[:nwords]
        words += [0] * (nwords - len(words))
        if n % WORD:
            words[n // WORD] &= (1 << (n % WORD)) - 1
        else:
            words[n // WORD] = 0
        self.words = words
        self._build()

    @classmethod
    def from_bits(cls, bits):
        bits = list(bits)
        words = [0] * (len(bits) // WORD + 1)
        for i, b in enumerate(bits):
            if b:
                words[i >> 6] |= 1 << (i & 63)
        return cls(len(bits), words)

    @classmethod
    def from_positions(cls, n, positions):
        """Bit sequence of length n with ones at the given 1-based positions."""
        words = [0] * (n // WORD + 1)
        for p in positions:
            if not 1 <= p <= n:
                raise IndexError(f"position {p} outside [1..{n}]")
            words[(p - 1) >> 6] |= 1 << ((p - 1) & 63)
        return cls(n, words)

    def _build(self):
        sb, blk = [], []
        total = 0
        for w, word in enumerate(self.words):
            if w % WORDS_PER_SUPER == 0:
                sb.append(total)
            blk.append(total - sb[-1])
            total += word.bit_count()
        self.ones = total
        self._sb = sb
        self._blk = blk
        # select hints: superblock holding the (j*SAMPLE+1)-th one / zero
        s1, s0 = [], []
        next1 = next0 = 1
        zeros_total = self.n - total
        for s, before in enumerate(sb):
            end = s + 1
            ones_end = sb[end] if end < len(sb) else total
            zeros_end = min(end * SUPER, self.n) - ones_end
            while next1 <= ones_end and next1 <= total:
                s1.append(s)
                next1 += SAMPLE
            while next0 <= zeros_end and next0 <= zeros_total:
                s0.append(s)
                next0 += SAMPLE
        self._s1 = s1
        self._s0 = s0

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.access(i)

    def access(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"bit index {i} outside [1..{self.n}]")
        i -= 1
        return self.words[i >> 6] >> (i & 63) & 1

    def rank1(self, i):
        if i <= 0:
            if i < 0:
                raise IndexError(f"rank index {i} is negative")
            return 0
        if i > self.n:
            raise IndexError(f"rank index {i} exceeds length {self.n}")
        return (self._sb[i >> 9] + self._blk[i >> 6]
                + (self.words[i >> 6] & ((1 << (i & 63)) - 1)).bit_count())

    def rank0(self, i):
        return i - self.rank1(i)

    def rank(self, i, alpha):
        return self.rank1(i) if alpha else i - self.rank1(i)

    def select1(self, k):
        if k < 1 or k > self.ones:
            return None
        sb = self._sb
        j = (k - 1) // SAMPLE
        lo = self._s1[j]
        hi = self._s1[j + 1] if j + 1 < len(self._s1) else len(sb) - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if sb[mid] < k:
                lo = mid
            else:
                hi = mid - 1
        k -= sb[lo]
        w = lo * WORDS_PER_SUPER
        blk = self._blk
        last = min(w + WORDS_PER_SUPER, len(self.words)) - 1
        while w < last and blk[w + 1] < k:
            w += 1
        k -= blk[w]
        return (w << 6) + _select_in_word(self.words[w], k) + 1

    def select0(self, k):
        if k < 1 or k > self.n - self.ones:
            return None
        sb = self._sb
        j = (k - 1) // SAMPLE
        lo = self._s0[j]
        hi = self._s0[j + 1] if j + 1 < len(self._s0) else len(sb) - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if mid * SUPER - sb[mid] < k:
                lo = mid
            else:
                hi = mid - 1
        k -= lo * SUPER - sb[lo]
        w = lo * WORDS_PER_SUPER
        blk = self._blk
        last = min(w + WORDS_PER_SUPER, len(self.words)) - 1
        base = w
        while w < last and (w + 1 - base) * WORD - blk[w + 1] < k:
            w += 1
        k -= (w - base) * WORD - blk[w]
        return (w << 6) + _select_in_word(~self.words[w] & _MASK64, k) + 1

    def select(self, k, alpha):
        return self.select1(k) if alpha else self.select0(k)

    def next1(self, i):
        """Smallest position > i holding a one, or None."""
        return self.select1(self.rank1(min(i, self.n)) + 1) if i < self.n else None

    def ones_positions(self):
        out = []
        for w, word in enumerate(self.words):
            while word:
                low = word & -word
                out.append((w << 6) + low.bit_length())
                word ^= low
        return out

    def to_list(self):
        return [self.access(i) for i in range(1, self.n + 1)]

    def report_bits(self):
        wn = width_for(self.n)
        return (self.n
                + len(self._sb) * wn
                + len(self._blk) * width_for(SUPER - WORD)
                + (len(self._s1) + len(self._s0)) * width_for(len(self._sb)))

    def to_bytes(self):
        nwords = (self.n + WORD - 1) // WORD
        return struct.pack(f"<Q{nwords}Q", self.n, *self.words[:nwords])

    @classmethod
    def from_bytes(cls, data, offset=0):
        """Decode a sequence; returns ``(bitseq, next_offset)``."""
        (n,) = struct.unpack_from("<Q", data, offset)
        nwords = (n + WORD - 1) // WORD
        words = struct.unpack_from(f"<{nwords}Q", data, offset + 8)
        return cls(n, words), offset + 8 + 8 * nwords

    def __eq__(self, other):
        return isinstance(other, BitSeq) and self.n == other.n and self.words == other.words

    def __repr__(self):
        if self.n <= 64:
            return f"BitSeq({''.join(map(str, self.to_list()))})"
        return f"BitSeq(n={self.n}, ones={self.ones})"


class ComplementView:
    """Read-only view of a BitSeq with every bit flipped."""

    __slots__ = ("base", "n", "ones")

    def __init__(self, base):
        self.base = base
        self.n = base.n
        self.ones = base.n - base.ones

    def access(self, i):
        return 1 - self.base.access(i)

    def rank1(self, i):
        return self.base.rank0(i)

    def rank0(self, i):
        return self.base.rank1(i)

    def select1(self, k):
        return self.base.select0(k)

    def select0(self, k):
        return self.base.select1(k)

    def report_bits(self):
        return 0


class PackedInts:
    """Fixed-width unsigned integers packed into 64-bit words (1-based index)."""

    __slots__ = ("n", "width", "words", "_mask")

    def __init__(self, values, width=None):
        values = list(values)
        self.n = len(values)
        if width is None:
            width = width_for(max(values, default=0))
        self.width = width
        self._mask = (1 << width) - 1
        nwords = (self.n * width + WORD - 1) // WORD + 1
        words = [0] * nwords
        pos = 0
        for v in values:
            if v < 0 or v > self._mask:
                raise ValueError(f"value {v} does not fit in {width} bits")
            w, off = pos >> 6, pos & 63
            words[w] |= (v << off) & _MASK64
            if off + width > WORD:
                words[w + 1] |= v >> (WORD - off)
            pos += width
        self.words = words

    def __len__(self):
        return self.n

    def get(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside [1..{self.n}]")
        pos = (i - 1) * self.width
        w = pos >> 6
        off = pos & 63
        val = self.words[w] >> off
        if off + self.width > WORD:
            val |= self.words[w + 1] << (WORD - off)
        return val & self._mask

    __getitem__ = get

    def to_list(self):
        return [self.get(i) for i in range(1, self.n + 1)]

    def report_bits(self):
        return self.n * self.width

    def to_bytes(self):
        nwords = (self.n * self.width + WORD - 1) // WORD
        return struct.pack(f"<QQ{nwords}Q", self.n, self.width, *self.words[:nwords])

    @classmethod
    def from_bytes(cls, data, offset=0):
        n, width = struct.unpack_from("<QQ", data, offset)
        nwords = (n * width + WORD - 1) // WORD
        words = struct.unpack_from(f"<{nwords}Q", data, offset + 16)
        obj = cls.__new__(cls)
        obj.n, obj.width = n, width
        obj._mask = (1 << width) - 1
        obj.words = list(words) + [0]
        return obj, offset + 16 + 8 * nwords
