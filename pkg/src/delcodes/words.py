"""Fixed-length binary words and the per-word primitives everything else builds on.

A word packs into a single integer with the leftmost symbol in the most
significant bit, so for words of one length the numeric order of packed
values is the lexicographic order of their 0/1 strings.  All functions
here are pure; words and word sets are immutable and safe to share.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

MAX_LEN = 62


class Word:
    """Immutable binary word of length 0..62, symbols indexed 1..n from the left."""

    __slots__ = ("n", "bits")

    def __init__(self, symbols: str = "") -> None:
        if len(symbols) > MAX_LEN:
            raise ValueError(f"word longer than {MAX_LEN} symbols: {len(symbols)}")
        bits = 0
        for c in symbols:
            if c == "1":
                bits = (bits << 1) | 1
            elif c == "0":
                bits = bits << 1
            else:
                raise ValueError(f"invalid symbol {c!r} in word {symbols!r}")
        self.n = len(symbols)
        self.bits = bits

    @classmethod
    def from_bits(cls, bits: int, n: int) -> "Word":
        if n < 0 or n > MAX_LEN:
            raise ValueError(f"word length out of range: {n}")
        if bits < 0 or bits >> n:
            raise ValueError(f"packed value {bits} does not fit in {n} bits")
        w = cls.__new__(cls)
        w.n = n
        w.bits = bits
        return w

    @classmethod
    def zeros(cls, n: int) -> "Word":
        return cls.from_bits(0, n)

    @classmethod
    def ones(cls, n: int) -> "Word":
        if n < 0 or n > MAX_LEN:
            raise ValueError(f"word length out of range: {n}")
        return cls.from_bits((1 << n) - 1, n)

    @classmethod
    def all_of_length(cls, n: int) -> Iterator["Word"]:
        """All 2**n words of length n in ascending packed order."""
        for bits in range(1 << n):
            yield cls.from_bits(bits, n)

    def symbol(self, i: int) -> int:
        """Symbol at position i (1-based from the left)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return (self.bits >> (self.n - i)) & 1

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __lt__(self, other: "Word") -> bool:
        return (self.n, self.bits) < (other.n, other.bits)

    def __le__(self, other: "Word") -> bool:
        return (self.n, self.bits) <= (other.n, other.bits)

    def __gt__(self, other: "Word") -> bool:
        return (self.n, self.bits) > (other.n, other.bits)

    def __ge__(self, other: "Word") -> bool:
        return (self.n, self.bits) >= (other.n, other.bits)


class WordSet:
    """Deduplicated set of equal-length words, iterated in ascending packed order."""

    __slots__ = ("member_length", "_packed", "_lookup")

    def __init__(self, member_length: int, members: Iterable[Word] = ()) -> None:
        packed = set()
        for w in members:
            if w.n != member_length:
                raise ValueError(
                    f"member length {w.n} differs from declared {member_length}"
                )
            packed.add(w.bits)
        self.member_length = member_length
        self._packed = tuple(sorted(packed))
        self._lookup = frozenset(packed)

    @classmethod
    def _from_packed(cls, member_length: int, packed: Iterable[int]) -> "WordSet":
        s = cls.__new__(cls)
        s.member_length = member_length
        s._lookup = frozenset(packed)
        s._packed = tuple(sorted(s._lookup))
        return s

    def packed(self) -> tuple[int, ...]:
        return self._packed

    def strings(self) -> list[str]:
        return [str(w) for w in self]

    def __len__(self) -> int:
        return len(self._packed)

    def __iter__(self) -> Iterator[Word]:
        n = self.member_length
        for bits in self._packed:
            yield Word.from_bits(bits, n)

    def __contains__(self, w: Word) -> bool:
        return w.n == self.member_length and w.bits in self._lookup

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WordSet)
            and self.member_length == other.member_length
            and self._lookup == other._lookup
        )

    def __hash__(self) -> int:
        return hash((self.member_length, self._lookup))

    def __le__(self, other: "WordSet") -> bool:
        return (
            self.member_length == other.member_length
            and self._lookup <= other._lookup
        )

    def __repr__(self) -> str:
        return f"WordSet(n={self.member_length}, size={len(self._packed)})"


def weight(w: Word) -> int:
    """Number of 1-symbols."""
    return w.bits.bit_count()


def complement(w: Word) -> Word:
    """Flip every symbol."""
    return Word.from_bits(w.bits ^ ((1 << w.n) - 1), w.n)


def reverse(w: Word) -> Word:
    """Read the word right to left."""
    return Word.from_bits(_reverse_packed(w.bits, w.n), w.n)


def reverse_complement(w: Word) -> Word:
    """Reverse and flip; the two steps commute."""
    return Word.from_bits(
        _reverse_packed(w.bits, w.n) ^ ((1 << w.n) - 1), w.n
    )


def delete_at(w: Word, i: int) -> Word:
    """Remove the symbol at position i (1-based), preserving order."""
    if not 1 <= i <= w.n:
        raise ValueError(f"position {i} out of range 1..{w.n}")
    return Word.from_bits(_delete_packed(w.bits, w.n, i), w.n - 1)


def deletion_ball(w: Word, t: int) -> WordSet:
    """All distinct subsequences of w with t symbols removed."""
    if not 0 <= t <= w.n:
        raise ValueError(f"deletion count {t} out of range 0..{w.n}")
    return WordSet._from_packed(w.n - t, _ball_packed(w.bits, w.n, t))


def is_subsequence(x: Word, y: Word) -> bool:
    """True iff x can be obtained from y by deletions (greedy left-to-right match)."""
    if x.n > y.n:
        return False
    xb, yb = x.bits, y.bits
    xi, yi = x.n, y.n
    while xi:
        if yi < xi:
            return False
        # compare leftmost unmatched symbols
        if ((xb >> (xi - 1)) & 1) == ((yb >> (yi - 1)) & 1):
            xi -= 1
        yi -= 1
    return True


def lcs_length(x: Word, y: Word) -> int:
    """Length of a longest common subsequence, by bit-parallel column updates.

    Zero bits of the running vector mark accumulated matches; one pass over
    the longer operand costs a handful of integer operations per symbol.
    """
    return _lcs_packed(x.bits, x.n, y.bits, y.n)


def levenshtein_indel(x: Word, y: Word) -> int:
    """Minimum number of insertions plus deletions transforming x into y."""
    return x.n + y.n - 2 * lcs_length(x, y)


def deletion_distance(u: Word, v: Word) -> int:
    """Half the insertion/deletion distance; defined for equal lengths only."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} != {v.n}")
    return u.n - lcs_length(u, v)


def hamming_distance(u: Word, v: Word) -> int:
    """Number of positions where the symbols differ."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} != {v.n}")
    return (u.bits ^ v.bits).bit_count()


def run_length_encode(w: Word) -> list[tuple[int, int]]:
    """Maximal runs left to right as (symbol, exponent) pairs."""
    if w.n == 0:
        raise ValueError("cannot run-length encode the empty word")
    runs: list[tuple[int, int]] = []
    bits, n = w.bits, w.n
    cur = (bits >> (n - 1)) & 1
    count = 1
    for i in range(2, n + 1):
        s = (bits >> (n - i)) & 1
        if s == cur:
            count += 1
        else:
            runs.append((cur, count))
            cur, count = s, 1
    runs.append((cur, count))
    return runs


# --- packed-integer internals -------------------------------------------
#
# The enumeration-heavy callers (dominance tables, conflict graphs) work on
# raw packed values and only materialize Word objects at their boundaries.


def _delete_packed(bits: int, n: int, i: int) -> int:
    """Drop the symbol at 1-based position i from an n-bit packed word."""
    shift = n - i
    return ((bits >> (shift + 1)) << shift) | (bits & ((1 << shift) - 1))


def _lcs_packed(xb: int, xn: int, yb: int, yn: int) -> int:
    if xn > yn:
        xb, xn, yb, yn = yb, yn, xb, xn
    if xn == 0:
        return 0
    mask = (1 << xn) - 1
    ones = xb  # bit k holds the symbol at position xn-k; both operands reversed together
    zeros = ones ^ mask
    v = mask
    for _ in range(yn):
        match = ones if yb & 1 else zeros
        u = v & match
        v = ((v + u) | (v & ~match)) & mask
        yb >>= 1
    return xn - v.bit_count()


def _reverse_packed(bits: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (bits & 1)
        bits >>= 1
    return out


def _ball1_packed(bits: int, n: int) -> frozenset[int]:
    return frozenset(_delete_packed(bits, n, i) for i in range(1, n + 1))


def _ball_packed(bits: int, n: int, t: int) -> frozenset[int]:
    """Packed values of all distinct subsequences after t deletions."""
    level = {bits}
    for k in range(t):
        ln = n - k
        level = {_delete_packed(b, ln, i) for b in level for i in range(1, ln + 1)}
    return frozenset(level)


@functools.lru_cache(maxsize=None)
def _ball_table(n: int, t: int) -> tuple[frozenset[int], ...]:
    """Deletion balls of every length-n word, indexed by packed value."""
    if t == 0:
        return tuple(frozenset((b,)) for b in range(1 << n))
    if t == 1:
        return tuple(_ball1_packed(b, n) for b in range(1 << n))
    prev = _ball_table(n - 1, t - 1)
    out = []
    for b in range(1 << n):
        acc: set[int] = set()
        for x in _ball1_packed(b, n):
            acc |= prev[x]
        out.append(frozenset(acc))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _containers(n: int, t: int) -> tuple[frozenset[int], ...]:
    """For each length n-t word, the length-n words whose deletion ball holds it."""
    balls = _ball_table(n, t)
    holders: list[set[int]] = [set() for _ in range(1 << (n - t))]
    for b in range(1 << n):
        for member in balls[b]:
            holders[member].add(b)
    return tuple(frozenset(h) for h in holders)
