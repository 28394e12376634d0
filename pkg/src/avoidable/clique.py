"""Maximum weight cliques through bisimplicial elimination orderings.

Each step needs a maximum weight clique in a cobipartite neighborhood, which
is a maximum weight independent set in the bipartite complement, which is a
minimum cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BoundExceededError, GraphError, NoBisimplicialOrderingError
from .graph import Graph, WeightedGraph, complement, induced_subgraph
from .search import VertexOrdering, lbfs

BRUTE_FORCE_CLIQUE_BOUND = 24


@dataclass
class FlowNetwork:
    """Directed network with integer capacities; build with :meth:`add_arc`."""

    num_nodes: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        if self.source == self.sink:
            raise GraphError("source and sink must differ")
        for x in (self.source, self.sink):
            if not 0 <= x < self.num_nodes:
                raise GraphError(f"node {x} out of range")

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        if capacity < 0:
            raise GraphError("capacities must be nonnegative")
        if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
            raise GraphError(f"arc ({u}, {v}) out of range")
        self.arcs.append((u, v, int(capacity)))


def max_flow(net: FlowNetwork) -> tuple[int, set[int]]:
    """Dinic's algorithm. Returns the flow value and the source side of a minimum cut."""
    n = net.num_nodes
    head: list[list[int]] = [[] for _ in range(n)]
    to: list[int] = []
    cap: list[int] = []
    for u, v, c in net.arcs:
        head[u].append(len(to))
        to.append(v)
        cap.append(c)
        head[v].append(len(to))
        to.append(u)
        cap.append(0)
    s, t = net.source, net.sink
    total = 0

    def bfs_levels() -> list[int]:
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for a in head[v]:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[v] + 1
                    q.append(to[a])
        return level

    while True:
        level = bfs_levels()
        if level[t] < 0:
            break
        it = [0] * n
        while True:
            # iterative DFS for one blocking-flow augmenting path
            path: list[int] = []
            v = s
            while v != t:
                advanced = False
                while it[v] < len(head[v]):
                    a = head[v][it[v]]
                    w = to[a]
                    if cap[a] > 0 and level[w] == level[v] + 1:
                        path.append(a)
                        v = w
                        advanced = True
                        break
                    it[v] += 1
                if not advanced:
                    if not path:
                        break
                    a = path.pop()
                    v = to[a ^ 1]
                    it[v] += 1
            if v != t:
                break
            push = min(cap[a] for a in path)
            for a in path:
                cap[a] -= push
                cap[a ^ 1] += push
            total += push
    level = bfs_levels()
    return total, {v for v in range(n) if level[v] >= 0}


def two_coloring(g: Graph) -> tuple[list[int], list[int]] | None:
    """Bipartition ``(A, B)`` (each component's smallest vertex in ``A``) or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.adj(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    q.append(u)
                elif color[u] == color[v]:
                    return None
    return [v for v in range(g.n) if color[v] == 0], [v for v in range(g.n) if color[v] == 1]


def bipartite_mwis(g: WeightedGraph, bipartition: tuple[list[int], list[int]]) -> set[int]:
    """Maximum weight independent set of a bipartite graph via minimum cut.

    Source feeds ``A`` with capacity ``w(a)``, ``B`` drains to the sink with
    ``w(b)``, and every edge gets capacity ``sum(w) + 1``. The set is ``A`` on the
    source side plus ``B`` on the sink side.
    """
    a_side, b_side = (sorted(set(x)) for x in bipartition)
    graph = g.graph
    if set(a_side) & set(b_side) or set(a_side) | set(b_side) != set(range(graph.n)):
        raise GraphError("bipartition must split the vertex set")
    for part in (a_side, b_side):
        if any(graph.has_edge(u, v) for u, v in combinations(part, 2)):
            raise GraphError("a side of the bipartition is not independent")
    n = graph.n
    big = sum(g.weights) + 1
    net = FlowNetwork(n + 2, n, n + 1)
    for a in a_side:
        net.add_arc(n, a, g.weights[a])
        for b in graph.adj(a):
            net.add_arc(a, b, big)
    for b in b_side:
        net.add_arc(b, n + 1, g.weights[b])
    _, source_side = max_flow(net)
    return {a for a in a_side if a in source_side} | {b for b in b_side if b not in source_side}


def max_weight_clique_cobipartite(g: WeightedGraph) -> set[int]:
    comp = complement(g.graph)
    parts = two_coloring(comp)
    if parts is None:
        raise GraphError("graph is not cobipartite")
    return bipartite_mwis(WeightedGraph(comp, g.weights), parts)


def is_bisimplicial_vertex(g: Graph, v: int) -> bool:
    """``N(v)`` splits into two cliques, i.e. the complement of ``G[N(v)]`` is bipartite."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    nb = g.adj(v)
    if len(nb) <= 1:
        return True
    sub, _ = induced_subgraph(g, nb)
    return two_coloring(complement(sub)) is not None


def _bisimplicial_in(g: Graph, alive: set[int], v: int) -> bool:
    nb = sorted(g.adj(v) & alive)
    # 2-colour the complement of G[nb]
    color: dict[int, int] = {}
    for s in nb:
        if s in color:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in nb:
                if y == x or g.has_edge(x, y):
                    continue
                if y not in color:
                    color[y] = 1 - color[x]
                    q.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_bisimplicial_elimination_ordering(g: Graph, order) -> bool:
    """Each ``v_i`` is bisimplicial in ``G[v_1..v_i]``."""
    alive: set[int] = set()
    for v in order:
        alive.add(v)
        if not _bisimplicial_in(g, alive, v):
            return False
    return True


def bisimplicial_elimination_ordering(g: Graph) -> VertexOrdering | None:
    """LBFS if it already qualifies, otherwise greedy peeling from the back.

    Greedy peeling is complete: bisimpliciality survives taking induced
    subgraphs, so removing any bisimplicial vertex never destroys a solution.
    """
    order = lbfs(g)
    if is_bisimplicial_elimination_ordering(g, order.sequence):
        return order
    alive = set(range(g.n))
    peeled = []
    while alive:
        v = next((u for u in sorted(alive) if _bisimplicial_in(g, alive, u)), None)
        if v is None:
            return None
        peeled.append(v)
        alive.discard(v)
    return VertexOrdering(tuple(reversed(peeled)))


def brute_force_bisimplicial_ordering_exists(g: Graph, bound: int = 12) -> bool:
    """Search over vertex subsets (memoised) for any bisimplicial elimination ordering."""
    if g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds bound {bound}")
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def ok(alive_mask: int) -> bool:
        if alive_mask == 0:
            return True
        alive = {v for v in range(g.n) if alive_mask >> v & 1}
        return any(_bisimplicial_in(g, alive, v) and ok(alive_mask & ~(1 << v)) for v in alive)

    return ok((1 << g.n) - 1)


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    weight: int
    ordering_used: VertexOrdering | None = None
    per_step_certificates: tuple[tuple[int, tuple[int, ...], int], ...] | None = None

    def to_json(self) -> dict:
        out = {"weight": self.weight, "vertices": list(self.vertices)}
        if self.ordering_used is not None:
            out["ordering"] = list(self.ordering_used.sequence)
        return out


def max_weight_clique(
    g: WeightedGraph, ordering: VertexOrdering | None = None, certificates: bool = False
) -> CliqueResult:
    """Maximum weight clique along a bisimplicial elimination ordering.

    Walks the ordering from the back; at each vertex ``v`` of the shrinking
    graph the best clique through ``v`` is ``{v}`` plus a maximum weight clique
    of its (cobipartite) neighborhood. The first strictly best candidate wins.
    """
    graph = g.graph
    if ordering is None:
        ordering = bisimplicial_elimination_ordering(graph)
        if ordering is None:
            raise NoBisimplicialOrderingError(
                "no bisimplicial elimination ordering; use brute_force_max_weight_clique"
            )
    elif not is_bisimplicial_elimination_ordering(graph, ordering.sequence):
        raise NoBisimplicialOrderingError("supplied ordering is not a bisimplicial elimination ordering")
    alive = set(range(graph.n))
    best: tuple[int, ...] | None = None
    best_w = -1
    steps = []
    for v in reversed(ordering.sequence):
        nb = sorted(graph.adj(v) & alive)
        if nb:
            sub, remap = induced_subgraph(graph, nb)
            local = max_weight_clique_cobipartite(
                WeightedGraph(sub, tuple(g.weights[u] for u in remap))
            )
            cand = tuple(sorted([v] + [remap[i] for i in local]))
        else:
            cand = (v,)
        w = g.weight_of(cand)
        if certificates:
            steps.append((v, cand, w))
        if w > best_w:
            best, best_w = cand, w
        alive.discard(v)
    assert best is not None
    return CliqueResult(best, best_w, ordering, tuple(steps) if certificates else None)


def brute_force_max_weight_clique(g: WeightedGraph, bound: int = BRUTE_FORCE_CLIQUE_BOUND) -> CliqueResult:
    """Exact optimum by branch and bound on bitmasks (bound: remaining candidate weight)."""
    graph = g.graph
    n = graph.n
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the brute-force clique bound {bound}")
    masks = graph.bitmasks()
    w = g.weights
    heaviest = max(range(n), key=lambda v: (w[v], -v))
    best = [w[heaviest], 1 << heaviest]

    def mask_weight(m: int) -> int:
        total = 0
        while m:
            low = m & -m
            total += w[low.bit_length() - 1]
            m ^= low
        return total

    def expand(clique: int, cw: int, cand: int) -> None:
        if cw > best[0]:
            best[0], best[1] = cw, clique
        if cw + mask_weight(cand) <= best[0]:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(clique | low, cw + w[v], cand & masks[v])
            if cw + mask_weight(cand) <= best[0]:
                return

    expand(0, 0, (1 << n) - 1)
    verts = tuple(v for v in range(n) if best[1] >> v & 1)
    return CliqueResult(verts, best[0])
