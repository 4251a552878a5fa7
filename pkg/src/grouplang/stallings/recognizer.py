"""Deciding whether a set of words is part of a free basis.

``W = {w_1, ..., w_n}`` is primitive exactly when the graph of ``<W>`` can be
turned into the one-vertex wedge on the generators by folds and exactly
``k' - n`` pinches, where ``k'`` counts the generators present after the
first normalization.  The pinch choices are explored depth first and every
normalized state is memoized by its canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freewords import FreeWord, check_words
from .graph import (
    NormalizeReport,
    PinchMove,
    SegmentGraph,
    apply_pinch,
    bouquet,
    enumerate_pinches,
    is_elementary_wedge,
    normalize,
)

_MEMO: dict[tuple, bool] = {}
_MEMO_LIMIT = 2_000_000


def clear_memo() -> None:
    _MEMO.clear()


@dataclass
class SearchStats:
    """What the search saw, for checking the structural bounds."""

    states: int = 0
    pinches: int = 0
    max_vertices: int = 0
    max_edges: int = 0
    bound_violations: list[str] = field(default_factory=list)
    prune_after_pinch: int = 0
    pinch_rank_deltas: set[int] = field(default_factory=set)
    fold_rank_increase: int = 0

    def observe(self, g: SegmentGraph) -> None:
        self.states += 1
        v, e, r = len(g.vertices), len(g.edges), g.rank()
        self.max_vertices = max(self.max_vertices, v)
        self.max_edges = max(self.max_edges, e)
        if not g.is_folded() or not g.is_topological():
            self.bound_violations.append(f"not folded and topological: {g}")
        elif r > 1 and (e > 3 * r - 3 or v > 2 * r - 2):
            self.bound_violations.append(f"rank {r} with |V|={v}, |E|={e}: {g}")
        elif r == 1 and (e != 1 or v != 1):
            self.bound_violations.append(f"rank 1 with |V|={v}, |E|={e}: {g}")

    @property
    def ok(self) -> bool:
        return (
            not self.bound_violations
            and self.prune_after_pinch == 0
            and self.pinch_rank_deltas <= {0, 1}
            and self.fold_rank_increase <= 0
        )


@dataclass
class RecognizerResult:
    primitive: bool
    reason: str
    budget: int
    trace: list[str] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    def __bool__(self) -> bool:
        return self.primitive


class _Search:
    def __init__(self, target_rank: int, same_edge: bool, memo: dict, stats: SearchStats):
        self.target_rank = target_rank
        self.same_edge = same_edge
        self.memo = memo
        self.stats = stats

    def children(self, g: SegmentGraph):
        for move in enumerate_pinches(g, self.same_edge):
            pinched = apply_pinch(g, move)
            self.stats.pinches += 1
            self.stats.pinch_rank_deltas.add(pinched.rank() - g.rank())
            report = NormalizeReport()
            h = normalize(pinched, report)
            if report.pruned:
                self.stats.prune_after_pinch += 1
            self.stats.fold_rank_increase = max(self.stats.fold_rank_increase, report.max_rank_increase)
            self.stats.observe(h)
            yield move, h

    def solve(self, g: SegmentGraph, remaining: int) -> bool:
        key = (g.canonical_form(), remaining, self.same_edge)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if remaining == 0:
            result = is_elementary_wedge(g)
        elif g.rank() + remaining < self.target_rank:
            # each pinch raises the rank by at most one
            result = False
        else:
            result = any(self.solve(h, remaining - 1) for _, h in self.children(g))
        if len(self.memo) > _MEMO_LIMIT:
            self.memo.clear()
        self.memo[key] = result
        return result

    def path(self, g: SegmentGraph, remaining: int) -> list[tuple[PinchMove, SegmentGraph]]:
        out = []
        while remaining > 0:
            for move, h in self.children(g):
                if self.solve(h, remaining - 1):
                    out.append((move, h))
                    g = h
                    break
            remaining -= 1
        return out


def recognize(
    words: list[FreeWord],
    k: int,
    *,
    same_edge_pinches: bool = True,
    trace: bool = False,
    memo: dict | None = None,
) -> RecognizerResult:
    """Decide primitivity of *words* in ``F_k``, with an optional move trace."""
    check_words(words)
    if not words:
        return RecognizerResult(False, "empty set", 0)
    n = len(words)
    if n > k:
        return RecognizerResult(False, f"{n} words cannot be part of a basis of F_{k}", k - n)
    check_words(words, k)
    stats = SearchStats()
    start = bouquet(list(words))
    g = normalize(start)
    stats.observe(g)
    gens = g.alphabet()
    budget = len(gens) - n
    if budget < 0:
        return RecognizerResult(
            False, f"only {len(gens)} generators survive normalization for {n} words", budget, stats=stats
        )
    search = _Search(len(gens), same_edge_pinches, _MEMO if memo is None else memo, stats)
    ok = search.solve(g, budget)
    lines: list[str] = []
    if ok and trace:
        lines.append(f"bouquet: {start}")
        lines.append(f"normalize: {g}")
        for move, h in search.path(g, budget):
            lines.append(f"pinch {move}, normalize: {h}")
    reason = "reaches the wedge" if ok else f"no sequence of {budget} pinches reaches the wedge"
    return RecognizerResult(ok, reason, budget, lines, stats)


def is_primitive_set(words: list[FreeWord], k: int, *, same_edge_pinches: bool = True) -> bool:
    return recognize(words, k, same_edge_pinches=same_edge_pinches).primitive
