"""Simple undirected graphs on dense integer vertex ids and derived constructions."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError

Edge = tuple[int, int]


def edge_id(u: int, v: int) -> Edge:
    """Canonical ``(min, max)`` form of the edge ``uv``."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Small-graph algorithms read ``adj(v)`` (frozensets, built lazily); the
    compiled kernels read the sorted CSR arrays from ``csr()``.
    """

    __slots__ = ("_n", "_m", "_adj", "_indptr", "_indices", "_edges", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._init_from_sets(n, [frozenset(s) for s in adj])

    def _init_from_sets(self, n: int, adj: list[frozenset[int]]) -> None:
        self._n = n
        self._adj = tuple(adj)
        self._m = sum(len(s) for s in adj) // 2
        self._indptr = None
        self._indices = None
        self._edges = None
        self._masks = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from per-vertex neighbor collections; symmetry is checked."""
        sets = [frozenset(int(u) for u in nb) for nb in adj]
        n = len(sets)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        for v, nb in enumerate(sets):
            if v in nb:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < n or v not in sets[u]:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
        g = cls.__new__(cls)
        g._init_from_sets(n, sets)
        return g

    @classmethod
    def from_edge_array(cls, n: int, edges: np.ndarray) -> "Graph":
        """Build from an ``(m, 2)`` integer array without touching Python sets.

        Intended for large inputs: duplicates collapse, loops and out-of-range
        ids raise. Adjacency sets are only materialised if ``adj`` is used.
        """
        n = int(n)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise GraphError(f"edge endpoint out of range for n={n}")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise GraphError("self-loop in edge array")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * n + hi)
        lo, hi = keys // n, keys % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        g = cls.__new__(cls)
        g._n = n
        g._m = int(keys.size)
        g._adj = None
        g._indptr = indptr
        g._indices = dst.astype(np.int64)
        g._edges = None
        g._masks = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def adj(self, v: int) -> frozenset[int]:
        if self._adj is None:
            ip, ix = self._indptr, self._indices
            self._adj = tuple(frozenset(ix[ip[u]:ip[u + 1]].tolist()) for u in range(self._n))
        return self._adj[v]

    def closed_adj(self, v: int) -> frozenset[int]:
        return self.adj(v) | {v}

    def degree(self, v: int) -> int:
        if self._adj is None:
            return int(self._indptr[v + 1] - self._indptr[v])
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj(u)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self._n) for v in sorted(self.adj(u)) if u < v
            )
        return list(self._edges)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` with every neighbor list sorted ascending."""
        if self._indptr is None:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            chunks = []
            for v in range(self._n):
                nb = sorted(self._adj[v])
                indptr[v + 1] = indptr[v] + len(nb)
                chunks.extend(nb)
            self._indptr = indptr
            self._indices = np.asarray(chunks, dtype=np.int64)
        return self._indptr, self._indices

    def bitmasks(self) -> list[int]:
        """Neighborhoods as Python int bitmasks (bit ``u`` set iff ``u`` is a neighbor)."""
        if self._masks is None:
            masks = []
            for v in range(self._n):
                b = 0
                for u in self.adj(v):
                    b |= 1 << u
                masks.append(b)
            self._masks = tuple(masks)
        return list(self._masks)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, w) for u, w in combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._m == other._m and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != self.graph.n:
            raise GraphError(f"expected {self.graph.n} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise GraphError("weights must be nonnegative integers")
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, graph: Graph, weight: int = 1) -> "WeightedGraph":
        return cls(graph, (weight,) * graph.n)

    def weight_of(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, all others non-adjacent, no repeats."""
    if not path or len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.n for v in path):
        return False
    k = len(path)
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(path[i], path[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """``cycle`` lists distinct vertices in cyclic order (first not repeated)."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def complement(g: Graph) -> Graph:
    n = g.n
    full = frozenset(range(n))
    return Graph.from_adjacency([full - g.adj(v) - {v} for v in range(n)])


def line_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    """Line graph plus the table mapping each new vertex to its edge of ``g``.

    New vertex ``i`` corresponds to ``g.edges()[i]``.
    """
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for v in range(g.n):
        inc = [index[edge_id(v, u)] for u in sorted(g.adj(v))]
        out.extend(combinations(inc, 2))
    return Graph(len(edges), out), edges


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[S]`` relabelled to ``0..|S|-1`` in ascending order of the original ids.

    Returns the subgraph and ``remap`` with ``remap[new] = old``.
    """
    keep = sorted(set(s))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError("vertex set not contained in V(G)")
    pos = {v: i for i, v in enumerate(keep)}
    adj = [[pos[u] for u in g.adj(v) if u in pos] for v in keep]
    return Graph.from_adjacency(adj), keep


def distances_from(g: Graph, s: int, allowed: frozenset[int] | set[int] | None = None) -> list[float]:
    """BFS distances from ``s``; unreachable vertices get ``math.inf``.

    ``allowed`` optionally restricts the search to a vertex subset.
    """
    if not 0 <= s < g.n:
        raise GraphError(f"vertex {s} out of range")
    dist: list[float] = [math.inf] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.adj(v):
            if dist[u] == math.inf and (allowed is None or u in allowed):
                dist[u] = d
                queue.append(u)
    return dist


def eccentricity(g: Graph, s: int) -> float:
    return max(distances_from(g, s))


def diameter(g: Graph) -> float:
    """Largest eccentricity; ``math.inf`` for disconnected graphs."""
    return max(eccentricity(g, v) for v in range(g.n))


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components (sorted lists) ordered by their minimum vertex.

    With ``within``, components of the subgraph induced by that set.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj(v):
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def shortest_path(g: Graph, s: int, t: int, allowed: set[int] | frozenset[int]) -> list[int] | None:
    """A shortest ``s``-``t`` path inside ``allowed`` (which must contain both ends)."""
    parent = {s: s}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            path = [t]
            while path[-1] != s:
                path.append(parent[path[-1]])
            return path[::-1]
        for u in sorted(g.adj(v)):
            if u in allowed and u not in parent:
                parent[u] = v
                queue.append(u)
    return None


# Named graphs used by tests, fixtures and the CLI.

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for i in range(n):
        for j in jumps:
            edges.add(edge_id(i, (i + j) % n))
    return Graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
