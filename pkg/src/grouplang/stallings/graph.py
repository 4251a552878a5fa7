"""Segment graphs: graphs whose edges carry reduced free-group words.

Every edge ``(src, dst, label)`` can be read in either direction; read
backwards it carries the inverse label.  An *end* of an edge is the pair
``(edge id, +1)`` at its source or ``(edge id, -1)`` at its target, and its
outgoing label is the label read away from that vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from ..errors import DomainError
from .freewords import FreeWord, check_words, format_word, generators, inverse

Edge = tuple[int, int, FreeWord]
End = tuple[int, int]


class SegmentGraph:
    """A mutable segment graph; use :meth:`copy` before editing shared graphs."""

    __slots__ = ("vertices", "edges", "_next_vertex", "_next_edge")

    def __init__(self, vertices=(), edges=()):
        self.vertices: set[int] = set(vertices)
        self.edges: dict[int, Edge] = {}
        self._next_vertex = max(self.vertices, default=-1) + 1
        self._next_edge = 0
        for src, dst, label in edges:
            self.add_edge(src, dst, label)

    def copy(self) -> "SegmentGraph":
        g = SegmentGraph.__new__(SegmentGraph)
        g.vertices = set(self.vertices)
        g.edges = dict(self.edges)
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        return g

    def new_vertex(self) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        self.vertices.add(v)
        return v

    def add_edge(self, src: int, dst: int, label: FreeWord) -> int:
        if not label:
            raise DomainError("segment labels must be nonempty")
        for v in (src, dst):
            self.vertices.add(v)
            self._next_vertex = max(self._next_vertex, v + 1)
        e = self._next_edge
        self._next_edge += 1
        self.edges[e] = (src, dst, tuple(label))
        return e

    # -- queries -----------------------------------------------------------

    def ends_at(self, v: int) -> list[End]:
        out = []
        for e, (src, dst, _) in self.edges.items():
            if src == v:
                out.append((e, 1))
            if dst == v:
                out.append((e, -1))
        return out

    def outgoing(self, end: End) -> FreeWord:
        e, sign = end
        label = self.edges[e][2]
        return label if sign == 1 else inverse(label)

    def far_vertex(self, end: End) -> int:
        src, dst, _ = self.edges[end[0]]
        return dst if end[1] == 1 else src

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for src, dst, _ in self.edges.values():
            deg[src] += 1
            deg[dst] += 1
        return deg

    def rank(self) -> int:
        """Topological rank ``|E| - |V| + 1`` (the graph is assumed connected)."""
        return len(self.edges) - len(self.vertices) + 1

    def letter_count(self) -> int:
        return sum(len(label) for _, _, label in self.edges.values())

    def alphabet(self) -> set[int]:
        return generators([label for _, _, label in self.edges.values()])

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for src, dst, _ in self.edges.values():
            adj[src].add(dst)
            adj[dst].add(src)
        start = next(iter(self.vertices))
        seen = {start}
        todo = [start]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def unfolded_pair(self) -> tuple[int, End, End] | None:
        """A vertex with two ends whose outgoing labels share a first letter."""
        for v in sorted(self.vertices):
            first: dict[int, End] = {}
            for end in self.ends_at(v):
                x = self.outgoing(end)[0]
                if x in first:
                    return v, first[x], end
                first[x] = end
        return None

    def is_folded(self) -> bool:
        return self.unfolded_pair() is None

    def is_topological(self) -> bool:
        if len(self.vertices) == 1 and len(self.edges) <= 1:
            return True
        return all(d >= 3 for d in self.degrees().values())

    def canonical_form(self) -> tuple:
        """An isomorphism-invariant encoding; equal encodings mean isomorphic graphs."""
        if not self.edges:
            return (len(self.vertices),)
        best = None
        for root in self.vertices:
            order = {root: 0}
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for end in sorted(self.ends_at(v), key=self.outgoing):
                    w = self.far_vertex(end)
                    if w not in order:
                        order[w] = len(order)
                        queue.append(w)
            if len(order) != len(self.vertices):
                raise DomainError("canonical_form needs a connected graph")
            edges = sorted(
                min((order[s], order[t], label), (order[t], order[s], inverse(label)))
                for s, t, label in self.edges.values()
            )
            code = (len(order), tuple(edges))
            if best is None or code < best:
                best = code
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SegmentGraph):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    __hash__ = None  # mutable

    def __str__(self) -> str:
        parts = [f"{s}-{format_word(label)}->{t}" for s, t, label in sorted(self.edges.values())]
        return "{" + ", ".join(parts) + "}" if parts else "{" + ", ".join(map(str, sorted(self.vertices))) + "}"

    def __repr__(self) -> str:
        return f"SegmentGraph({sorted(self.vertices)}, {sorted(self.edges.values())})"


def bouquet(words: list[FreeWord]) -> SegmentGraph:
    """One vertex with a loop labelled by each word."""
    if not words:
        raise DomainError("bouquet needs at least one word")
    check_words(words)
    return SegmentGraph([0], [(0, 0, w) for w in words])


# -- folding ---------------------------------------------------------------------


def _common_prefix(u: FreeWord, v: FreeWord) -> int:
    n = 0
    for x, y in zip(u, v):
        if x != y:
            break
        n += 1
    return n


def _identify(g: SegmentGraph, keep: int, drop: int) -> None:
    if keep == drop:
        return
    g.vertices.discard(drop)
    for e, (s, t, label) in list(g.edges.items()):
        if s == drop or t == drop:
            g.edges[e] = (keep if s == drop else s, keep if t == drop else t, label)


def fold_once(g: SegmentGraph) -> tuple[str, SegmentGraph] | None:
    """Apply one fold, returning the case (``'I'``, ``'II'``, ``'III'``) and
    the new graph, or None when *g* is already folded."""
    found = g.unfolded_pair()
    if found is None:
        return None
    v, end1, end2 = found
    h = g.copy()
    l1, l2 = g.outgoing(end1), g.outgoing(end2)
    if end1[0] == end2[0]:
        # both ends of one loop: label u m u^-1 becomes a stem u and a loop m
        c = _common_prefix(l1, l2)
        del h.edges[end1[0]]
        w = h.new_vertex()
        h.add_edge(v, w, l1[:c])
        h.add_edge(w, w, l1[c:len(l1) - c])
        return "III", h
    if len(l1) > len(l2):
        end1, end2, l1, l2 = end2, end1, l2, l1
    f1, f2 = g.far_vertex(end1), g.far_vertex(end2)
    c = _common_prefix(l1, l2)
    if c == len(l1) == len(l2):
        del h.edges[end2[0]]
        _identify(h, f1, f2)
        return "I", h
    if c == len(l1):
        del h.edges[end2[0]]
        h.add_edge(f1, f2, l2[c:])
        return "II", h
    del h.edges[end1[0]]
    del h.edges[end2[0]]
    w = h.new_vertex()
    h.add_edge(v, w, l1[:c])
    h.add_edge(w, f1, l1[c:])
    h.add_edge(w, f2, l2[c:])
    return "III", h


def fold(g: SegmentGraph) -> SegmentGraph:
    while (step := fold_once(g)) is not None:
        g = step[1]
    return g


def prune(g: SegmentGraph) -> SegmentGraph:
    """Repeatedly delete degree-one vertices with their edge."""
    g = g.copy()
    while True:
        deg = g.degrees()
        leaves = [v for v, d in deg.items() if d == 1]
        if not leaves:
            return g
        for v in leaves:
            if v not in g.vertices:
                continue
            for e, (s, t, _) in list(g.edges.items()):
                if s == v or t == v:
                    del g.edges[e]
            g.vertices.discard(v)
        # isolated vertices left behind by pruning a lone edge
        if g.edges:
            g.vertices = {x for s, t, _ in g.edges.values() for x in (s, t)}


def merge(g: SegmentGraph) -> SegmentGraph:
    """Remove degree-two vertices that are not the base of a single loop.

    Vertices whose two ends fold together are left alone, so concatenated
    labels stay reduced."""
    g = g.copy()
    changed = True
    while changed:
        changed = False
        for v in sorted(g.vertices):
            ends = g.ends_at(v)
            if len(ends) != 2 or ends[0][0] == ends[1][0]:
                continue
            if g.outgoing(ends[0])[0] == g.outgoing(ends[1])[0]:
                continue  # unfolded here: fold first
            (e1, s1), (e2, s2) = ends
            # path: far1 --inverse(out1)--> v --out2--> far2
            left = inverse(g.outgoing((e1, s1)))
            right = g.outgoing((e2, s2))
            far1, far2 = g.far_vertex((e1, s1)), g.far_vertex((e2, s2))
            del g.edges[e1], g.edges[e2]
            g.vertices.discard(v)
            g.add_edge(far1, far2, left + right)
            changed = True
            break
    return g


@dataclass
class NormalizeReport:
    folds: int = 0
    pruned: bool = False
    merged: bool = False
    max_rank_increase: int = 0


def normalize(g: SegmentGraph, report: NormalizeReport | None = None) -> SegmentGraph:
    """Fold exhaustively, prune and merge, until the graph is stable."""
    report = report if report is not None else NormalizeReport()
    while True:
        while (step := fold_once(g)) is not None:
            h = step[1]
            report.folds += 1
            report.max_rank_increase = max(report.max_rank_increase, h.rank() - g.rank())
            g = h
        pruned = prune(g)
        if len(pruned.edges) != len(g.edges):
            report.pruned = True
        merged = merge(pruned)
        if len(merged.edges) != len(pruned.edges):
            report.merged = True
        if merged.is_folded():
            return merged
        g = merged


def is_elementary_wedge(g: SegmentGraph, gens: set[int] | None = None) -> bool:
    """One vertex carrying exactly one loop per generator, labelled by it."""
    gens = g.alphabet() if gens is None else set(gens)
    if len(g.vertices) != 1 or len(g.edges) != len(gens):
        return False
    labels = [label for _, _, label in g.edges.values()]
    if any(len(label) != 1 for label in labels):
        return False
    return {abs(label[0]) for label in labels} == gens


# -- pinches ---------------------------------------------------------------------


@dataclass(frozen=True)
class VertexVertex:
    v: int
    w: int

    def __post_init__(self) -> None:
        if self.v == self.w:
            raise DomainError("a vertex pinch needs two distinct vertices")


@dataclass(frozen=True)
class VertexEdge:
    v: int
    edge: int
    position: int


@dataclass(frozen=True)
class EdgeEdge:
    edge: int
    position: int
    other: int
    other_position: int


PinchMove = Union[VertexVertex, VertexEdge, EdgeEdge]


def _check_position(g: SegmentGraph, e: int, p: int) -> FreeWord:
    if e not in g.edges:
        raise DomainError(f"no edge {e}")
    label = g.edges[e][2]
    if not 1 <= p <= len(label) - 1:
        raise DomainError(f"position {p} is not interior to a label of length {len(label)}")
    return label


def apply_pinch(g: SegmentGraph, move: PinchMove) -> SegmentGraph:
    h = g.copy()
    if isinstance(move, VertexVertex):
        if move.v not in g.vertices or move.w not in g.vertices:
            raise DomainError("pinch vertices must belong to the graph")
        _identify(h, move.v, move.w)
    elif isinstance(move, VertexEdge):
        label = _check_position(g, move.edge, move.position)
        if move.v not in g.vertices:
            raise DomainError("pinch vertex must belong to the graph")
        s, t, _ = h.edges.pop(move.edge)
        h.add_edge(s, move.v, label[: move.position])
        h.add_edge(move.v, t, label[move.position :])
    elif isinstance(move, EdgeEdge):
        label = _check_position(g, move.edge, move.position)
        other = _check_position(g, move.other, move.other_position)
        v = h.new_vertex()
        if move.edge == move.other:
            p, q = sorted((move.position, move.other_position))
            if p == q:
                raise DomainError("a pinch within one edge needs two distinct positions")
            s, t, _ = h.edges.pop(move.edge)
            h.add_edge(s, v, label[:p])
            h.add_edge(v, v, label[p:q])
            h.add_edge(v, t, label[q:])
        else:
            s, t, _ = h.edges.pop(move.edge)
            s2, t2, _ = h.edges.pop(move.other)
            h.add_edge(s, v, label[: move.position])
            h.add_edge(v, t, label[move.position :])
            h.add_edge(s2, v, other[: move.other_position])
            h.add_edge(v, t2, other[move.other_position :])
    else:
        raise TypeError(f"not a pinch move: {move!r}")
    return h


def enumerate_pinches(g: SegmentGraph, same_edge: bool = True) -> list[PinchMove]:
    verts = sorted(g.vertices)
    edges = sorted(g.edges)
    moves: list[PinchMove] = [VertexVertex(v, w) for i, v in enumerate(verts) for w in verts[i + 1 :]]
    interior = [(e, p) for e in edges for p in range(1, len(g.edges[e][2]))]
    moves += [VertexEdge(v, e, p) for v in verts for e, p in interior]
    for i, (e, p) in enumerate(interior):
        for f, q in interior[i + 1 :]:
            if e != f or same_edge:
                moves.append(EdgeEdge(e, p, f, q))
    return moves


def graph_from_words(words: list[FreeWord]) -> SegmentGraph:
    return normalize(bouquet(words))
