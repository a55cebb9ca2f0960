"""Dominant pairs of binary words under t deletions.

A word u dominates a word v (same length, u != v) when every word reachable
from v by t deletions is also reachable from u.  This module provides the
definitional test, exhaustive enumeration of all dominant pairs, closed-form
generation from built-in pattern tables for one and two deletions, and a
report type that diffs generated pairs against the exhaustive enumeration.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .words import (
    Word,
    WordSet,
    _ball_packed,
    _ball_table,
    _containers,
    _lcs_packed,
    _reverse_packed,
    deletion_distance,
)

BRUTE_FORCE_CAP = 14


@dataclass(frozen=True)
class DominancePair:
    """Ordered pair (u dominant, v subordinate) at a fixed deletion count."""

    u: Word
    v: Word
    t: int

    @classmethod
    def checked(cls, u: Word, v: Word, t: int) -> "DominancePair":
        """Construct only if the containment actually holds."""
        if not is_dominant(u, v, t):
            raise ValueError(f"{u} does not dominate {v} at t={t}")
        return cls(u, v, t)

    def sort_key(self) -> tuple[int, int]:
        return (self.v.bits, self.u.bits)

    def __str__(self) -> str:
        return f"({self.u} > {self.v}, t={self.t})"


def is_dominant(u: Word, v: Word, t: int) -> bool:
    """True iff u != v and the t-deletion ball of v sits inside that of u."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} != {v.n}")
    if not 1 <= t <= u.n:
        raise ValueError(f"deletion count {t} out of range 1..{u.n}")
    if u.bits == v.bits:
        return False
    # containment forces intersecting balls, i.e. deletion distance at most t
    if u.n - _lcs_packed(u.bits, u.n, v.bits, v.n) > t:
        return False
    return _ball_packed(v.bits, v.n, t) <= _ball_packed(u.bits, u.n, t)


@functools.lru_cache(maxsize=None)
def _dominant_pairs_packed(n: int, t: int) -> tuple[tuple[int, int], ...]:
    """All packed (u, v) with u dominant over v, sorted by (v, u).

    For each v, candidate dominators are the words whose ball holds every
    member of v's ball, found by intersecting per-member container sets;
    words with ball distance above t never enter a candidate set.
    """
    balls = _ball_table(n, t)
    holders = _containers(n, t)
    pairs: list[tuple[int, int]] = []
    for v in range(1 << n):
        members = sorted(balls[v])
        cand = set(holders[members[0]])
        for w in members[1:]:
            if len(cand) == 1:
                break
            cand &= holders[w]
        cand.discard(v)
        for u in sorted(cand):
            pairs.append((u, v))
    return tuple(pairs)


def enumerate_dominant_pairs(
    n: int, t: int, cap: int = BRUTE_FORCE_CAP
) -> list[DominancePair]:
    """Every dominant pair of length n, by exhaustive scan; sorted by (v, u)."""
    if not 2 <= n <= cap:
        raise ValueError(f"length {n} outside enumeration range 2..{cap}")
    if not 1 <= t <= 3:
        raise ValueError(f"deletion count {t} outside enumeration range 1..3")
    if t > n:
        raise ValueError(f"deletion count {t} exceeds length {n}")
    return [
        DominancePair(Word.from_bits(u, n), Word.from_bits(v, n), t)
        for u, v in _dominant_pairs_packed(n, t)
    ]


def dominators_of(v: Word, t: int, cap: int = BRUTE_FORCE_CAP) -> WordSet:
    """All words dominating v."""
    _check_query(v.n, t, cap)
    bv = _ball_packed(v.bits, v.n, t)
    found = []
    for ub in range(1 << v.n):
        if ub == v.bits:
            continue
        if v.n - _lcs_packed(ub, v.n, v.bits, v.n) > t:
            continue
        if bv <= _ball_packed(ub, v.n, t):
            found.append(ub)
    return WordSet._from_packed(v.n, found)


def subordinates_of(u: Word, t: int, cap: int = BRUTE_FORCE_CAP) -> WordSet:
    """All words dominated by u."""
    _check_query(u.n, t, cap)
    bu = _ball_packed(u.bits, u.n, t)
    found = []
    for vb in range(1 << u.n):
        if vb == u.bits:
            continue
        if u.n - _lcs_packed(u.bits, u.n, vb, u.n) > t:
            continue
        if _ball_packed(vb, u.n, t) <= bu:
            found.append(vb)
    return WordSet._from_packed(u.n, found)


def _check_query(n: int, t: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"length {n} exceeds scan cap {cap}")
    if not 1 <= t <= n:
        raise ValueError(f"deletion count {t} out of range 1..{n}")


# --- closed-form pattern tables -------------------------------------------
#
# Exponents are symbolic: (a, b, c) stands for a*n + b*m + c.  A row
# instantiates at concrete (n, m, p) by materializing each run; any negative
# exponent means m is outside the row's range.  Roles: 'p' is the chosen
# symbol, 'q' its complement.

Exponent = tuple[int, int, int]
Run = tuple[str, Exponent]


def _e(n: int = 0, m: int = 0, c: int = 0) -> Exponent:
    return (n, m, c)


_ONE = _e(c=1)
_TWO = _e(c=2)


@dataclass(frozen=True)
class PatternPair:
    """One row of a closed-form table: run templates for a dominant pair."""

    family: str
    row: int
    u_runs: tuple[Run, ...]
    v_runs: tuple[Run, ...]

    @property
    def tag(self) -> str:
        return f"{self.family}:{self.row}"

    @property
    def uses_m(self) -> bool:
        return any(e[1] for _, e in self.u_runs + self.v_runs)

    def instantiate(self, n: int, m: int, p: int) -> tuple[Word, Word] | None:
        """Words (u, v) at concrete parameters, or None if m is out of range."""
        u = _materialize(self.u_runs, n, m, p)
        v = _materialize(self.v_runs, n, m, p)
        if u is None or v is None:
            return None
        return Word.from_bits(u, n), Word.from_bits(v, n)


def _materialize(runs: tuple[Run, ...], n: int, m: int, p: int) -> int | None:
    bits = 0
    total = 0
    for role, (a, b, c) in runs:
        e = a * n + b * m + c
        if e < 0:
            return None
        if (role == "p") == (p == 1):
            bits = (bits << e) | ((1 << e) - 1)
        else:
            bits <<= e
        total += e
    assert total == n, "pattern row exponents must sum to the word length"
    return bits


# v is a two-run word; u transposes the adjacent symbols at its run boundary.
BOUNDARY_SWAP = PatternPair(
    "boundary-swap",
    1,
    u_runs=(("p", _e(m=1, c=-1)), ("q", _ONE), ("p", _ONE), ("q", _e(n=1, m=-1, c=-1))),
    v_runs=(("p", _e(m=1)), ("q", _e(n=1, m=-1))),
)

# Pairs at Hamming distance one (two deletions).
SUBSTITUTION_ROWS = (
    PatternPair(
        "substitution",
        1,
        u_runs=(("p", _e(m=1)), ("q", _ONE), ("p", _e(n=1, m=-1, c=-2)), ("q", _ONE)),
        v_runs=(("p", _e(n=1, c=-1)), ("q", _ONE)),
    ),
    PatternPair(
        "substitution",
        2,
        u_runs=(
            ("p", _e(m=1)),
            ("q", _ONE),
            ("p", _e(n=1, m=-1, c=-3)),
            ("q", _ONE),
            ("p", _ONE),
        ),
        v_runs=(("p", _e(n=1, c=-2)), ("q", _ONE), ("p", _ONE)),
    ),
)

# Pairs differing in both the first and the last position (two deletions).
OPPOSITE_ENDS_ROWS = (
    PatternPair(
        "opposite-ends",
        1,
        u_runs=(("q", _ONE), ("p", _ONE), ("q", _e(n=1, c=-4)), ("p", _ONE), ("q", _ONE)),
        v_runs=(("p", _ONE), ("q", _e(n=1, c=-2)), ("p", _ONE)),
    ),
    PatternPair(
        "opposite-ends",
        2,
        u_runs=(("q", _ONE), ("p", _e(n=1, c=-3)), ("q", _ONE), ("p", _ONE)),
        v_runs=(("p", _e(n=1, c=-1)), ("q", _ONE)),
    ),
)

# Pairs agreeing on the first symbol with two or more differing positions
# (two deletions).
INTERIOR_ROWS = (
    PatternPair(
        "interior",
        1,
        u_runs=(
            ("p", _ONE),
            ("q", _ONE),
            ("p", _e(m=1, c=-1)),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _e(n=1, m=-1, c=-3)),
        ),
        v_runs=(("p", _ONE), ("q", _ONE), ("p", _e(m=1)), ("q", _e(n=1, m=-1, c=-2))),
    ),
    PatternPair(
        "interior",
        2,
        u_runs=(
            ("p", _ONE),
            ("q", _e(m=1)),
            ("p", _ONE),
            ("q", _ONE),
            ("p", _e(n=1, m=-1, c=-3)),
        ),
        v_runs=(("p", _ONE), ("q", _e(m=1, c=1)), ("p", _e(n=1, m=-1, c=-2))),
    ),
    PatternPair(
        "interior",
        3,
        u_runs=(("p", _TWO), ("q", _ONE), ("p", _e(n=1, c=-3))),
        v_runs=(("p", _ONE), ("q", _ONE), ("p", _e(n=1, c=-2))),
    ),
    PatternPair(
        "interior",
        4,
        u_runs=(
            ("p", _e(m=1, c=-2)),
            ("q", _ONE),
            ("p", _TWO),
            ("q", _ONE),
            ("p", _e(n=1, m=-1, c=-2)),
        ),
        v_runs=(("p", _e(m=1)), ("q", _ONE), ("p", _e(n=1, m=-1, c=-1))),
    ),
    PatternPair(
        "interior",
        5,
        u_runs=(
            ("p", _e(m=1, c=-1)),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _ONE),
            ("p", _e(n=1, m=-1, c=-2)),
        ),
        v_runs=(("p", _e(m=1)), ("q", _ONE), ("p", _e(n=1, m=-1, c=-1))),
    ),
    PatternPair(
        "interior",
        6,
        u_runs=(("p", _e(n=1, c=-4)), ("q", _ONE), ("p", _TWO), ("q", _ONE)),
        v_runs=(("p", _e(n=1, c=-2)), ("q", _ONE), ("p", _ONE)),
    ),
    PatternPair(
        "interior",
        7,
        u_runs=(("p", _e(n=1, c=-3)), ("q", _ONE), ("p", _ONE), ("q", _ONE)),
        v_runs=(("p", _e(n=1, c=-2)), ("q", _ONE), ("p", _ONE)),
    ),
    PatternPair(
        "interior",
        8,
        u_runs=(
            ("p", _e(m=1)),
            ("q", _ONE),
            ("p", _e(n=1, m=-1, c=-3)),
            ("q", _ONE),
            ("p", _ONE),
        ),
        v_runs=(("p", _e(n=1, c=-1)), ("q", _ONE)),
    ),
    PatternPair(
        "interior",
        9,
        u_runs=(
            ("p", _e(m=1, c=-2)),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _e(n=1, m=-1, c=-2)),
        ),
        v_runs=(("p", _e(m=1)), ("q", _e(n=1, m=-1))),
    ),
    PatternPair(
        "interior",
        10,
        u_runs=(
            ("p", _e(m=1, c=-2)),
            ("q", _ONE),
            ("p", _TWO),
            ("q", _e(n=1, m=-1, c=-1)),
        ),
        v_runs=(("p", _e(m=1)), ("q", _e(n=1, m=-1))),
    ),
    PatternPair(
        "interior",
        11,
        u_runs=(("p", _e(n=1, c=-2)), ("q", _ONE), ("p", _ONE)),
        v_runs=(("p", _e(n=1, c=-1)), ("q", _ONE)),
    ),
    PatternPair(
        "interior",
        12,
        u_runs=(("p", _e(n=1, c=-3)), ("q", _ONE), ("p", _TWO)),
        v_runs=(("p", _e(n=1, c=-1)), ("q", _ONE)),
    ),
    PatternPair(
        "interior",
        13,
        u_runs=(
            ("p", _e(m=1, c=-1)),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _e(n=1, m=-1, c=-3)),
        ),
        v_runs=(
            ("p", _e(m=1)),
            ("q", _ONE),
            ("p", _ONE),
            ("q", _e(n=1, m=-1, c=-2)),
        ),
    ),
    PatternPair(
        "interior",
        14,
        u_runs=(("p", _e(n=1, c=-3)), ("q", _TWO), ("p", _ONE)),
        v_runs=(("p", _e(n=1, c=-2)), ("q", _TWO)),
    ),
    PatternPair(
        "interior",
        15,
        u_runs=(("p", _e(n=1, c=-4)), ("q", _ONE), ("p", _TWO), ("q", _ONE)),
        v_runs=(("p", _e(n=1, c=-3)), ("q", _TWO), ("p", _ONE)),
    ),
    PatternPair(
        "interior",
        16,
        u_runs=(("p", _e(n=1, c=-4)), ("q", _ONE), ("p", _ONE), ("q", _ONE), ("p", _ONE)),
        v_runs=(("p", _e(n=1, c=-3)), ("q", _ONE), ("p", _ONE), ("q", _ONE)),
    ),
    PatternPair(
        "interior",
        17,
        u_runs=(("p", _e(m=1, c=-1)), ("q", _e(n=1, m=-1, c=-1)), ("p", _ONE), ("q", _ONE)),
        v_runs=(("p", _e(m=1)), ("q", _e(n=1, m=-1, c=-1)), ("p", _ONE)),
    ),
    PatternPair(
        "interior",
        18,
        u_runs=(("p", _e(m=1, c=-1)), ("q", _e(n=1, m=-1)), ("p", _ONE)),
        v_runs=(("p", _e(m=1)), ("q", _e(n=1, m=-1))),
    ),
)

TWO_DELETION_ROWS = SUBSTITUTION_ROWS + OPPOSITE_ENDS_ROWS + INTERIOR_ROWS


@dataclass(frozen=True)
class FilteredInstance:
    """A pattern-row instantiation rejected by the checked constructor."""

    source: str
    n: int
    m: int | None
    p: int
    u: Word
    v: Word

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "m": self.m,
            "p": self.p,
            "u": str(self.u),
            "v": str(self.v),
        }


@dataclass
class GenerationResult:
    """Closed-form pairs with per-pair source tags and rejected instantiations."""

    n: int
    t: int
    pairs: list[DominancePair]
    provenance: dict[DominancePair, tuple[str, ...]]
    filtered: list[FilteredInstance] = field(default_factory=list)


def generate_closed_form(n: int, t: int) -> list[DominancePair]:
    """Dominant pairs from the closed-form tables alone; sorted by (v, u)."""
    return closed_form_generation(n, t).pairs


def closed_form_generation(n: int, t: int) -> GenerationResult:
    """Closed-form generation with provenance, for t of one or two deletions."""
    if t == 1:
        if n < 2:
            raise ValueError("single-deletion tables need length at least 2")
        acc, filtered = _generate_t1(n)
    elif t == 2:
        if n < 3:
            raise ValueError("double-deletion tables need length at least 3")
        acc, filtered = _generate_t2(n)
    else:
        raise ValueError(f"no closed-form tables for t={t}")

    pairs = {}
    for (ub, vb), tags in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        pair = DominancePair(Word.from_bits(ub, n), Word.from_bits(vb, n), t)
        pairs[pair] = tuple(sorted(tags))
    return GenerationResult(
        n=n, t=t, pairs=list(pairs), provenance=pairs, filtered=filtered
    )


def _generate_t1(n: int):
    acc: dict[tuple[int, int], set[str]] = {}
    filtered: list[FilteredInstance] = []
    _add_constant_subordinates(acc, n, 1)
    for p in (0, 1):
        for m in range(1, n):
            _try_row(acc, filtered, BOUNDARY_SWAP, n, m, p, t=1)
    return acc, filtered


def _generate_t2(n: int):
    acc: dict[tuple[int, int], set[str]] = {}
    filtered: list[FilteredInstance] = []
    _add_constant_subordinates(acc, n, 2)

    # anything dominant under one deletion stays dominant under two
    t1_acc, _ = _generate_t1(n)
    for key in t1_acc:
        acc.setdefault(key, set()).add("monotone-lift")

    if n <= 4:
        # short lengths are handled by exhaustive scan, not pattern rows
        for u, v in _dominant_pairs_packed(n, 2):
            acc.setdefault((u, v), set()).add("small-n")
        return acc, filtered

    for pattern in TWO_DELETION_ROWS:
        ms = range(n + 1) if pattern.uses_m else (None,)
        for p in (0, 1):
            for m in ms:
                _try_row(acc, filtered, pattern, n, m, p, t=2, close=True)
    return acc, filtered


def _add_constant_subordinates(acc, n: int, t: int) -> None:
    """Words dominating the all-zero and all-one words: weight at most t,
    respectively at least n - t (excluding the subordinate itself)."""
    zero, one = 0, (1 << n) - 1
    for ub in range(1 << n):
        w = ub.bit_count()
        if ub != zero and w <= t:
            acc.setdefault((ub, zero), set()).add("all-zero")
        if ub != one and w >= n - t:
            acc.setdefault((ub, one), set()).add("all-one")


def _try_row(acc, filtered, pattern: PatternPair, n, m, p, t, close=False) -> None:
    inst = pattern.instantiate(n, 0 if m is None else m, p)
    if inst is None:
        return
    u, v = inst
    if u == v or not is_dominant(u, v, t):
        filtered.append(FilteredInstance(pattern.tag, n, m, p, u, v))
        return
    images = _pair_images(u.bits, v.bits, n) if close else [(u.bits, v.bits)]
    for key in images:
        acc.setdefault(key, set()).add(pattern.tag)


def _pair_images(ub: int, vb: int, n: int) -> list[tuple[int, int]]:
    mask = (1 << n) - 1
    ur, vr = _reverse_packed(ub, n), _reverse_packed(vb, n)
    return [
        (ub, vb),
        (ub ^ mask, vb ^ mask),
        (ur, vr),
        (ur ^ mask, vr ^ mask),
    ]


def equivalence_closure(pairs) -> set[DominancePair]:
    """Close a pair collection under complementing, reversal, and both."""
    out: set[DominancePair] = set()
    for pair in pairs:
        n = pair.u.n
        for ub, vb in _pair_images(pair.u.bits, pair.v.bits, n):
            out.add(
                DominancePair(Word.from_bits(ub, n), Word.from_bits(vb, n), pair.t)
            )
    return out


@dataclass
class CharacterizationReport:
    """Diff between exhaustively enumerated and closed-form-generated pairs."""

    n: int
    t: int
    brute_count: int
    generated_count: int
    missing: list[DominancePair]
    spurious: list[DominancePair]
    filtered: list[FilteredInstance]

    @property
    def confirmed(self) -> bool:
        return not self.missing and not self.spurious

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "brute_count": self.brute_count,
            "generated_count": self.generated_count,
            "missing": [{"u": str(p.u), "v": str(p.v)} for p in self.missing],
            "spurious": [{"u": str(p.u), "v": str(p.v)} for p in self.spurious],
            "filtered": [f.to_json_dict() for f in self.filtered],
        }

    def summary(self) -> str:
        lines = [
            f"n={self.n} t={self.t}: "
            f"enumerated {self.brute_count}, generated {self.generated_count}, "
            f"missing {len(self.missing)}, spurious {len(self.spurious)}, "
            f"filtered {len(self.filtered)}"
        ]
        for p in self.missing:
            lines.append(f"  missing: u={p.u} v={p.v}")
        for p in self.spurious:
            lines.append(f"  spurious: u={p.u} v={p.v}")
        return "\n".join(lines)


def verify_characterization(
    n: int, t: int, cap: int = BRUTE_FORCE_CAP
) -> CharacterizationReport:
    """Check the closed-form tables against the exhaustive enumeration."""
    if t not in (1, 2):
        raise ValueError(f"no closed-form tables for t={t}")
    brute = enumerate_dominant_pairs(n, t, cap=cap)
    generation = closed_form_generation(n, t)
    brute_set = set(brute)
    generated_set = set(generation.pairs)
    missing = sorted(brute_set - generated_set, key=DominancePair.sort_key)
    spurious = sorted(generated_set - brute_set, key=DominancePair.sort_key)
    return CharacterizationReport(
        n=n,
        t=t,
        brute_count=len(brute_set),
        generated_count=len(generated_set),
        missing=missing,
        spurious=spurious,
        filtered=generation.filtered,
    )
