"""LBFS and MCS orderings and the avoidable vertices they expose."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import BoundExceededError, GraphError, NotConnectedError
from .graph import Graph, distances_from, is_connected
from .kernels.searches import lbfs_order, mcs_order

END_VERTEX_BOUND = 10


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of ``0..n-1`` with its inverse."""

    sequence: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(v) for v in self.sequence)
        if sorted(seq) != list(range(len(seq))):
            raise GraphError("ordering is not a permutation of 0..n-1")
        object.__setattr__(self, "sequence", seq)

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.sequence)
        for i, v in enumerate(self.sequence):
            pos[v] = i
        return tuple(pos)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]

    @property
    def last(self) -> int:
        return self.sequence[-1]

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering(self.sequence[::-1])


def _check_start(g: Graph, start: int | None) -> int:
    if start is None:
        return -1
    if not 0 <= start < g.n:
        raise GraphError(f"start vertex {start} out of range for n={g.n}")
    return int(start)


def lbfs(g: Graph, start: int | None = None) -> VertexOrdering:
    """Lexicographic breadth-first search in O(n + m).

    Ties go to the smallest id. Without ``start`` the search begins at vertex 0;
    on disconnected graphs the remaining components follow in order of their
    smallest vertex.
    """
    indptr, indices = g.csr()
    order = lbfs_order(indptr, indices, g.n, _check_start(g, start))
    return VertexOrdering(tuple(order.tolist()))


def mcs(g: Graph, start: int | None = None) -> VertexOrdering:
    """Maximum cardinality search; same tie-breaking and restart rules as :func:`lbfs`."""
    indptr, indices = g.csr()
    order = mcs_order(indptr, indices, g.n, _check_start(g, start))
    return VertexOrdering(tuple(order.tolist()))


def lbfs_labels_ordering(g: Graph, start: int | None = None) -> VertexOrdering:
    """Reference LBFS that keeps explicit label lists (quadratic).

    Used as an independent check on the partition-refinement kernel.
    """
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    numbered = [False] * n
    seq = []
    for i in range(n):
        if i == 0 and start is not None:
            v = start
        else:
            v = max((u for u in range(n) if not numbered[u]), key=lambda u: (labels[u], -u))
        seq.append(v)
        numbered[v] = True
        for w in g.adj(v):
            if not numbered[w]:
                labels[w].append(n - i)
    return VertexOrdering(tuple(seq))


def is_lbfs_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Check the LBFS four-point condition.

    For ``a < b < c`` in the ordering with ``ac`` an edge and ``ab`` a non-edge,
    some ``d < a`` must be adjacent to ``b`` but not to ``c``.
    """
    pos = {v: i for i, v in enumerate(order)}
    for a in order:
        for c in g.adj(a):
            if pos[c] <= pos[a]:
                continue
            for b in order[pos[a] + 1:pos[c]]:
                if g.has_edge(a, b):
                    continue
                if not any(pos[d] < pos[a] and not g.has_edge(d, c) for d in g.adj(b)):
                    return False
    return True


def _ordered_partition_successors(g: Graph, cells: tuple[frozenset[int], ...]):
    """All LBFS moves from an ordered partition of the unnumbered vertices."""
    first = cells[0]
    for v in sorted(first):
        nb = g.adj(v)
        out = []
        for i, cell in enumerate(cells):
            cell = cell - {v} if i == 0 else cell
            inside = cell & nb
            outside = cell - nb
            if inside:
                out.append(frozenset(inside))
            if outside:
                out.append(frozenset(outside))
        yield v, tuple(out)


def lbfs_all_end_vertices(g: Graph, bound: int = END_VERTEX_BOUND) -> set[int]:
    """Every vertex that some LBFS execution (any start, any tie-break) visits last.

    Exponential in the worst case; memoised on the ordered partition of the
    unnumbered vertices, which determines all future choices.
    """
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds the end-vertex enumeration bound {bound}")

    @lru_cache(maxsize=None)
    def ends(cells: tuple[frozenset[int], ...]) -> frozenset[int]:
        if sum(len(c) for c in cells) == 1:
            return cells[0]
        found: set[int] = set()
        for _, nxt in _ordered_partition_successors(g, cells):
            found |= ends(nxt)
        return frozenset(found)

    return set(ends((frozenset(range(g.n)),)))


def mcs_all_end_vertices(g: Graph, bound: int = END_VERTEX_BOUND) -> set[int]:
    """Every vertex that some MCS execution visits last (memoised on the visited set)."""
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds the end-vertex enumeration bound {bound}")
    masks = g.bitmasks()
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def ends(visited: int) -> frozenset[int]:
        rest = full & ~visited
        if rest & (rest - 1) == 0:
            return frozenset([rest.bit_length() - 1])
        counts = {u: bin(masks[u] & visited).count("1") for u in range(g.n) if rest >> u & 1}
        best = max(counts.values())
        found: set[int] = set()
        for u, c in counts.items():
            if c == best:
                found |= ends(visited | 1 << u)
        return frozenset(found)

    return set(ends(0))


def two_avoidable(g: Graph) -> tuple[int, int]:
    """Two distinct avoidable vertices in linear time via a double LBFS sweep."""
    if g.n < 2:
        raise GraphError("need at least two vertices")
    a = lbfs(g).last
    b = lbfs(g, a).last
    return a, b


def diametral_avoidable_pair(g: Graph) -> tuple[int, int, int]:
    """Two avoidable vertices at distance ``diam(G)``.

    Starts the double sweep at a vertex of maximum eccentricity, found by BFS
    from every vertex.
    """
    if g.n < 2:
        raise GraphError("need at least two vertices")
    if not is_connected(g):
        raise NotConnectedError("diametral pair requires a connected graph")
    ecc = [max(distances_from(g, v)) for v in range(g.n)]
    s = int(np.argmax(ecc))
    a = lbfs(g, s).last
    b = lbfs(g, a).last
    d = distances_from(g, a)[b]
    assert d != math.inf
    return a, b, int(d)
