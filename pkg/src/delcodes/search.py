"""Exact maximum code sizes by branch-and-bound over conflict graphs.

Candidate words become vertices; two words conflict when their deletion
balls intersect (equivalently, deletion distance at most t), so codes are
exactly the independent sets.  Vertex sets are bitmasks over the candidate
list, the bound is a greedy clique cover of the open vertices, and two
search-space reductions are available: dropping dominated words and
pre-selecting the two constant words.
"""

from __future__ import annotations

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .codes import Code, vt_code
from .dominance import _dominant_pairs_packed
from .words import Word, _ball_packed, complement, reverse, reverse_complement

SEARCH_CAPS = {1: 12, 2: 10, 3: 10}
ENUMERATION_CAP = 7
_BUDGET_CHECK_INTERVAL = 2048


class SearchBudgetExceeded(Exception):
    """Raised when full enumeration runs out of time budget."""


@dataclass(frozen=True)
class SearchConfig:
    n: int
    t: int
    basic_only: bool = True
    force_constants: bool = True
    enumerate_all: bool = False
    canonical_witness: bool = False
    time_budget: float = 600.0
    workers: int = 1

    def validate(self) -> None:
        if self.t not in SEARCH_CAPS:
            raise ValueError(f"deletion count {self.t} not supported (1..3)")
        if self.t >= self.n:
            raise ValueError(
                f"deletion count {self.t} must be below the word length {self.n}"
            )
        if self.n > SEARCH_CAPS[self.t]:
            raise ValueError(
                f"length {self.n} exceeds search cap {SEARCH_CAPS[self.t]} for t={self.t}"
            )
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.time_budget < 0:
            raise ValueError("time budget must be nonnegative")


@dataclass(frozen=True)
class SearchResult:
    n: int
    t: int
    optimum: int
    witness: Code
    node_count: int
    wall_time_ms: int
    exhausted: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "optimum": self.optimum,
            "witness": [str(w) for w in self.witness],
            "node_count": self.node_count,
            "wall_time_ms": self.wall_time_ms,
            "exhausted": self.exhausted,
        }


class ConflictGraph:
    """Undirected graph on candidate words; edge iff deletion balls intersect."""

    __slots__ = ("t", "word_length", "vertices", "adj", "_index")

    def __init__(self, t: int, vertices: tuple[Word, ...], adj: tuple[int, ...]):
        self.t = t
        self.word_length = vertices[0].n if vertices else 0
        self.vertices = vertices
        self.adj = adj
        self._index = {w.bits: i for i, w in enumerate(vertices)}

    def index_of(self, w: Word) -> int:
        try:
            return self._index[w.bits]
        except KeyError:
            raise ValueError(f"{w} is not among the candidates") from None

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(len(self.vertices))) // 2

    def __len__(self) -> int:
        return len(self.vertices)


@functools.lru_cache(maxsize=None)
def _dominant_words_packed(n: int, t: int) -> frozenset[int]:
    return frozenset(u for u, _ in _dominant_pairs_packed(n, t))


def build_candidates(n: int, t: int, basic_only: bool) -> list[Word]:
    """All words of length n, minus the dominated-replaceable ones if requested."""
    if t not in SEARCH_CAPS:
        raise ValueError(f"deletion count {t} not supported (1..3)")
    if n > SEARCH_CAPS[t]:
        raise ValueError(f"length {n} exceeds search cap {SEARCH_CAPS[t]} for t={t}")
    if basic_only:
        dominant = _dominant_words_packed(n, t)
        return [Word.from_bits(b, n) for b in range(1 << n) if b not in dominant]
    return [Word.from_bits(b, n) for b in range(1 << n)]


def build_conflict_graph(candidates: list[Word], t: int) -> ConflictGraph:
    """Graph over the given words, vertex order ascending by packed value."""
    if not candidates:
        raise ValueError("candidate list must be nonempty")
    n = candidates[0].n
    for w in candidates:
        if w.n != n:
            raise ValueError(f"candidate length {w.n} differs from {n}")
    if not 1 <= t <= n:
        raise ValueError(f"deletion count {t} out of range 1..{n}")
    verts = tuple(sorted(set(candidates), key=lambda w: w.bits))
    sharers: dict[int, list[int]] = {}
    for i, w in enumerate(verts):
        for member in _ball_packed(w.bits, n, t):
            sharers.setdefault(member, []).append(i)
    adj = [0] * len(verts)
    for idxs in sharers.values():
        if len(idxs) < 2:
            continue
        mask = 0
        for i in idxs:
            mask |= 1 << i
        for i in idxs:
            adj[i] |= mask
    for i in range(len(verts)):
        adj[i] &= ~(1 << i)
    return ConflictGraph(t, verts, tuple(adj))


# --- bitmask independent-set core -----------------------------------------


def _cover_bound(open_mask: int, adj: tuple[int, ...]) -> int:
    """Greedy clique cover of the open vertices; its size bounds any
    independent set inside them."""
    covers: list[int] = []
    count = 0
    rem = open_mask
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        av = adj[v]
        for idx, common in enumerate(covers):
            if common >> v & 1:
                covers[idx] = common & av
                break
        else:
            covers.append(av & open_mask)
            count += 1
    return count


def _greedy_independent(open_mask: int, adj: tuple[int, ...]) -> tuple[int, int]:
    """Deterministic min-degree greedy; returns (size, chosen_mask)."""
    size = 0
    chosen = 0
    while open_mask:
        best_v = -1
        best_deg = -1
        rem = open_mask
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            deg = (adj[v] & open_mask).bit_count()
            if best_v < 0 or deg < best_deg:
                best_v, best_deg = v, deg
        chosen |= 1 << best_v
        size += 1
        open_mask &= ~(adj[best_v] | (1 << best_v))
    return size, chosen


def _branch_vertex(open_mask: int, adj: tuple[int, ...]) -> int:
    """Open vertex of maximum open-degree, ties to the smallest index."""
    best_v = -1
    best_deg = -1
    rem = open_mask
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        deg = (adj[v] & open_mask).bit_count()
        if deg > best_deg:
            best_v, best_deg = v, deg
    return best_v


def _solve_exact(
    adj: tuple[int, ...],
    open_mask: int,
    base_size: int,
    base_chosen: int,
    best_size: int,
    best_chosen: int,
    deadline: float | None,
) -> tuple[int, int, int, bool]:
    """Exact max independent set extension of (base_size, base_chosen).

    Branch-and-reduce: open vertices whose open neighbourhood is a clique of
    size 0, 1, or 2 belong to some maximum solution and are taken outright;
    the remainder branches on the highest-degree open vertex under the greedy
    clique-cover bound.  Returns (best_size, best_chosen, nodes, exhausted);
    on deadline expiry the best found so far comes back with exhausted False.
    """
    nodes = 0
    stack = [(open_mask, base_size, base_chosen)]
    while stack:
        nodes += 1
        if deadline is not None and nodes % _BUDGET_CHECK_INTERVAL == 0:
            if time.monotonic() > deadline:
                return best_size, best_chosen, nodes, False
        om, size, chosen = stack.pop()
        while om:
            reduced = False
            rem = om
            while rem:
                low = rem & -rem
                rem ^= low
                v = low.bit_length() - 1
                nb = adj[v] & om
                d = nb.bit_count()
                if d == 0:
                    om ^= low
                elif d == 1:
                    om &= ~(nb | low)
                elif d == 2:
                    b1 = nb & -nb
                    u2 = (nb ^ b1).bit_length() - 1
                    if adj[b1.bit_length() - 1] >> u2 & 1:
                        om &= ~(nb | low)
                    else:
                        continue
                else:
                    continue
                size += 1
                chosen |= low
                reduced = True
                rem &= om
            if not reduced:
                break
        if size > best_size:
            best_size, best_chosen = size, chosen
        if not om:
            continue
        if size + _cover_bound(om, adj) <= best_size:
            continue
        v = _branch_vertex(om, adj)
        bit = 1 << v
        stack.append((om & ~bit, size, chosen))
        stack.append((om & ~bit & ~adj[v], size + 1, chosen | bit))
    return best_size, best_chosen, nodes, True


def _solve_worker(args) -> tuple[int, int, int, bool]:
    adj, om, size, chosen, best_size, deadline = args
    return _solve_exact(adj, om, size, chosen, best_size, 0, deadline)


def _split_frontier(
    adj: tuple[int, ...],
    open_mask: int,
    base_size: int,
    base_chosen: int,
    target: int,
) -> list[tuple[int, int, int]]:
    """Expand the root into at least `target` subproblems breadth-first."""
    frontier = [(open_mask, base_size, base_chosen)]
    while len(frontier) < target:
        expandable = [f for f in frontier if f[0]]
        if not expandable:
            break
        om, size, chosen = max(expandable, key=lambda f: (f[0].bit_count(), -f[1]))
        frontier.remove((om, size, chosen))
        v = _branch_vertex(om, adj)
        bit = 1 << v
        frontier.append((om & ~bit & ~adj[v], size + 1, chosen | bit))
        frontier.append((om & ~bit, size, chosen))
    return frontier


def max_code_size(config: SearchConfig) -> SearchResult:
    """Exact maximum cardinality of a t-deletion-correcting code of length n."""
    config.validate()
    start = time.monotonic()
    deadline = start + config.time_budget if config.time_budget else None
    graph, open0, size0, chosen0 = _prepare(config)
    adj = graph.adj

    best_size, best_chosen = _initial_incumbent(graph, open0, size0, chosen0)

    if config.workers == 1 or len(graph) <= 4:
        best_size, best_chosen, nodes, exhausted = _solve_exact(
            adj, open0, size0, chosen0, best_size, best_chosen, deadline
        )
    else:
        subproblems = _split_frontier(adj, open0, size0, chosen0, 4 * config.workers)
        nodes = len(subproblems)
        exhausted = True
        tasks = [
            (adj, om, size, chosen, best_size, deadline)
            for om, size, chosen in subproblems
        ]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for size, chosen, sub_nodes, sub_done in pool.map(_solve_worker, tasks):
                nodes += sub_nodes
                exhausted = exhausted and sub_done
                if size > best_size or (size == best_size and chosen):
                    best_size, best_chosen = size, chosen

    if config.canonical_witness and exhausted:
        best_chosen = _canonical_witness(adj, open0, size0, chosen0, best_size)

    witness = Code([graph.vertices[i] for i in _bits_of(best_chosen)])
    return SearchResult(
        n=config.n,
        t=config.t,
        optimum=best_size,
        witness=witness,
        node_count=nodes,
        wall_time_ms=int((time.monotonic() - start) * 1000),
        exhausted=exhausted,
    )


def enumerate_optimal_codes(config: SearchConfig) -> list[Code]:
    """All maximum codes that are basic, one canonical member per equivalence class."""
    config.validate()
    if not config.enumerate_all:
        raise ValueError("enumeration requires enumerate_all")
    if config.n > ENUMERATION_CAP:
        raise ValueError(
            f"length {config.n} exceeds enumeration cap {ENUMERATION_CAP}"
        )
    base = replace(config, enumerate_all=False, canonical_witness=False, workers=1)
    base_result = max_code_size(base)
    if not base_result.exhausted:
        raise SearchBudgetExceeded(
            f"optimum at n={config.n}, t={config.t} not settled within budget"
        )
    optimum = base_result.optimum

    start = time.monotonic()
    deadline = start + config.time_budget if config.time_budget else None
    graph, open0, size0, chosen0 = _prepare(config)
    adj = graph.adj

    found: list[int] = []
    nodes = 0
    stack = [(open0, size0, chosen0)]
    while stack:
        nodes += 1
        if deadline is not None and nodes % _BUDGET_CHECK_INTERVAL == 0:
            if time.monotonic() > deadline:
                raise SearchBudgetExceeded(
                    f"enumeration at n={config.n}, t={config.t} ran out of budget"
                )
        om, size, chosen = stack.pop()
        if size == optimum:
            found.append(chosen)
            continue
        if not om or size + _cover_bound(om, adj) < optimum:
            continue
        v = _branch_vertex(om, adj)
        bit = 1 << v
        stack.append((om & ~bit, size, chosen))
        stack.append((om & ~bit & ~adj[v], size + 1, chosen | bit))

    dominant = _dominant_words_packed(config.n, config.t)
    classes: dict[tuple[str, ...], Code] = {}
    for chosen in found:
        words = [graph.vertices[i] for i in _bits_of(chosen)]
        if any(w.bits in dominant for w in words):
            continue
        key = _canonical_class_key(words)
        classes.setdefault(key, Code([Word(s) for s in key]))
    return [classes[k] for k in sorted(classes)]


def _initial_incumbent(
    graph: ConflictGraph, open0: int, size0: int, chosen0: int
) -> tuple[int, int]:
    """Strong deterministic starting solution: min-degree greedy extension of
    the root state, improved for single deletions by the best checksum-residue
    code present among the candidates."""
    adj = graph.adj
    size, chosen = _greedy_independent(open0, adj)
    best_size, best_chosen = size + size0, chosen | chosen0
    if graph.t == 1:
        n = graph.word_length
        for a in range(n + 1):
            mask = 0
            for w in vt_code(n, a):
                i = graph._index.get(w.bits)
                if i is not None:  # pruned words just shrink the seed
                    mask |= 1 << i
            if mask.bit_count() > best_size:
                best_size, best_chosen = mask.bit_count(), mask
    return best_size, best_chosen


def _prepare(config: SearchConfig):
    """Candidate graph plus the root state (open mask, chosen size and mask)."""
    candidates = build_candidates(config.n, config.t, config.basic_only)
    graph = build_conflict_graph(candidates, config.t)
    all_mask = (1 << len(graph)) - 1
    if not config.force_constants:
        return graph, all_mask, 0, 0
    forced_words = (Word.zeros(config.n), Word.ones(config.n))
    forced = 0
    blocked = 0
    for w in forced_words:
        i = graph.index_of(w)
        if forced & graph.adj[i]:
            raise ValueError("forced vertices conflict with each other")
        forced |= 1 << i
        blocked |= graph.adj[i]
    open0 = all_mask & ~forced & ~blocked
    return graph, open0, forced.bit_count(), forced


def _canonical_witness(
    adj: tuple[int, ...], open0: int, size0: int, chosen0: int, optimum: int
) -> int:
    """Lexicographically smallest optimum solution, fixed vertex by vertex."""
    chosen = chosen0
    size = size0
    om = open0
    while size < optimum:
        rem = om
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            bit = 1 << v
            if _exists_of_size(adj, om & ~bit & ~adj[v], size + 1, optimum):
                chosen |= bit
                size += 1
                om &= ~bit & ~adj[v]
                break
        else:
            raise AssertionError("canonical witness reconstruction failed")
    return chosen


def _exists_of_size(adj: tuple[int, ...], open_mask: int, size: int, target: int) -> bool:
    stack = [(open_mask, size)]
    while stack:
        om, sz = stack.pop()
        if sz == target:
            return True
        if sz + _cover_bound(om, adj) < target:
            continue
        v = _branch_vertex(om, adj)
        bit = 1 << v
        stack.append((om & ~bit, sz))
        stack.append((om & ~bit & ~adj[v], sz + 1))
    return False


def _canonical_class_key(words: list[Word]) -> tuple[str, ...]:
    images = (
        tuple(sorted(str(w) for w in words)),
        tuple(sorted(str(complement(w)) for w in words)),
        tuple(sorted(str(reverse(w)) for w in words)),
        tuple(sorted(str(reverse_complement(w)) for w in words)),
    )
    return min(images)


def _bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
