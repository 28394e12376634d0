"""Elimination fill, chordality and minimal triangulations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceededError, GraphError
from .graph import Edge, Graph, edge_id
from .search import VertexOrdering, lbfs

MINIMAL_TRIANGULATION_BOUND = 7


@dataclass(frozen=True)
class Triangulation:
    """``base`` plus ``fill`` edges; ``graph`` is the union."""

    base: Graph
    fill: frozenset[Edge]

    def __post_init__(self):
        fill = frozenset(edge_id(u, v) for u, v in self.fill)
        for u, v in fill:
            if self.base.has_edge(u, v):
                raise GraphError(f"fill edge ({u}, {v}) already in the base graph")
        object.__setattr__(self, "fill", fill)

    @property
    def graph(self) -> Graph:
        return Graph(self.base.n, list(self.base.edges()) + sorted(self.fill))

    def sorted_fill(self) -> list[Edge]:
        return sorted(self.fill)


def _with_edges(g: Graph, extra: Iterable[Edge]) -> Graph:
    return Graph(g.n, list(g.edges()) + list(extra))


def deficiency(g: Graph, v: int) -> set[Edge]:
    """Non-adjacent pairs inside ``N(v)``."""
    nb = sorted(g.adj(v))
    return {(a, b) for a, b in combinations(nb, 2) if not g.has_edge(a, b)}


def elimination_fill(g: Graph, sigma: Sequence[int] | VertexOrdering) -> Triangulation:
    """Filled graph of the elimination game along ``sigma``.

    Each vertex in turn has its current neighborhood completed and is removed.
    """
    seq = tuple(sigma)
    if sorted(seq) != list(range(g.n)):
        raise GraphError("elimination ordering must be a permutation of V")
    cur = [set(g.adj(v)) for v in range(g.n)]
    fill: set[Edge] = set()
    for v in seq:
        nb = sorted(cur[v])
        for a, b in combinations(nb, 2):
            if b not in cur[a]:
                cur[a].add(b)
                cur[b].add(a)
                fill.add((a, b))
        for u in nb:
            cur[u].discard(v)
    return Triangulation(g, frozenset(fill))


def perfect_elimination_check(g: Graph, peo: Sequence[int]) -> bool:
    """Parent test: for each vertex its later neighbors minus the earliest one
    must be neighbors of that earliest one."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.adj(v) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        padj = g.adj(parent)
        if any(u != parent and u not in padj for u in later):
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, VertexOrdering | None]:
    """Reverse LBFS is a perfect elimination ordering iff the graph is chordal."""
    peo = lbfs(g).reversed()
    if perfect_elimination_check(g, peo.sequence):
        return True, peo
    return False, None


def is_minimal_triangulation(g: Graph, t: Triangulation) -> bool:
    """No single fill edge can be dropped while keeping the graph chordal."""
    if t.base != g:
        raise GraphError("triangulation is over a different base graph")
    h = t.graph
    if not is_chordal(h)[0]:
        raise GraphError("not a triangulation: base plus fill is not chordal")
    edges = set(h.edges())
    for f in t.fill:
        if is_chordal(Graph(g.n, edges - {f}))[0]:
            return False
    return True


def minimal_triangulation_below(g: Graph, h: Graph) -> Triangulation:
    """A minimal triangulation sandwiched between ``g`` and chordal ``h``.

    Repeatedly drops fill edges (ascending) whose removal keeps chordality.
    """
    if h.n != g.n:
        raise GraphError("graphs differ in vertex count")
    if any(not h.has_edge(u, v) for u, v in g.edges()):
        raise GraphError("h is not a supergraph of g")
    if not is_chordal(h)[0]:
        raise GraphError("h is not chordal")
    base = set(g.edges())
    current = set(h.edges())
    changed = True
    while changed:
        changed = False
        for f in sorted(current - base):
            trial = current - {f}
            if is_chordal(Graph(g.n, trial))[0]:
                current = trial
                changed = True
    return Triangulation(g, frozenset(current - base))


def simplicial_in_some_minimal_triangulation(g: Graph, v: int) -> bool:
    """Make ``V - v`` a clique, shrink to a minimal triangulation, test ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    others = [u for u in range(g.n) if u != v]
    star = _with_edges(g, [(a, b) for a, b in combinations(others, 2) if not g.has_edge(a, b)])
    h = minimal_triangulation_below(g, star).graph
    return h.is_clique(h.adj(v))


def enumerate_minimal_triangulations(
    g: Graph, bound: int = MINIMAL_TRIANGULATION_BOUND
) -> Iterator[Triangulation]:
    """All minimal triangulations, in ascending order of their sorted fill.

    Runs the elimination game over every ordering, memoising on the set of
    eliminated vertices together with the fill so far (the remaining graph
    depends only on which vertices are gone), then keeps inclusion-minimal fills.
    """
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds the minimal-triangulation bound {bound}")
    n = g.n
    masks = g.bitmasks()
    full = (1 << n) - 1

    def remaining_adj(gone: int) -> list[int]:
        # u, w remaining are adjacent iff joined through eliminated vertices
        out = [0] * n
        for u in range(n):
            if gone >> u & 1:
                continue
            seen = 1 << u
            frontier = 1 << u
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    lsb = f & -f
                    nxt |= masks[lsb.bit_length() - 1]
                    f ^= lsb
                nxt &= ~seen
                seen |= nxt
                frontier = nxt & gone
            out[u] = seen & ~gone & ~(1 << u)
        return out

    fills: set[frozenset[Edge]] = set()
    seen_states: set[tuple[int, frozenset[Edge]]] = set()
    stack: list[tuple[int, frozenset[Edge]]] = [(0, frozenset())]
    adj_cache: dict[int, list[int]] = {}
    while stack:
        gone, fill = stack.pop()
        if (gone, fill) in seen_states:
            continue
        seen_states.add((gone, fill))
        if gone == full:
            fills.add(fill)
            continue
        cur = adj_cache.get(gone)
        if cur is None:
            cur = adj_cache[gone] = remaining_adj(gone)
        for v in range(n):
            if gone >> v & 1:
                continue
            nb = [u for u in range(n) if cur[v] >> u & 1]
            added = {(a, b) for a, b in combinations(nb, 2) if not masks[a] >> b & 1}
            stack.append((gone | 1 << v, fill | added))
    minimal = [f for f in fills if not any(o < f for o in fills)]
    for f in sorted(minimal, key=sorted):
        yield Triangulation(g, f)


def brute_force_minimal_triangulations(g: Graph, bound: int = 5) -> list[frozenset[Edge]]:
    """Inclusion-minimal chordal fills by scanning every subset of non-edges."""
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds the subset-scan bound {bound}")
    non_edges = [e for e in combinations(range(g.n), 2) if not g.has_edge(*e)]
    chordal_fills = []
    for r in range(len(non_edges) + 1):
        for sub in combinations(non_edges, r):
            s = frozenset(sub)
            if any(c <= s for c in chordal_fills):
                continue
            if is_chordal(_with_edges(g, s))[0]:
                chordal_fills.append(s)
    return sorted(chordal_fills, key=sorted)
