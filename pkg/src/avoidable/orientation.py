"""Orientations, digraphs, holes, and 1-perfect orientation recognition via 2-SAT."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceededError, GraphError
from .graph import Edge, Graph, edge_id

HOLE_BOUND = 16
BRUTE_FORCE_EDGE_BOUND = 14


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of ``host``.

    ``direction[i]`` refers to ``host.edges()[i]``; True orients it from the
    lower endpoint to the higher one.
    """

    host: Graph
    direction: tuple[bool, ...]

    def __post_init__(self):
        d = tuple(bool(x) for x in self.direction)
        if len(d) != self.host.m:
            raise GraphError(f"expected {self.host.m} directions, got {len(d)}")
        object.__setattr__(self, "direction", d)

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[Sequence[int]]) -> "Orientation":
        chosen: dict[Edge, bool] = {}
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            e = edge_id(u, v)
            if not host.has_edge(*e):
                raise GraphError(f"arc ({u}, {v}) is not an edge of the host")
            if e in chosen:
                raise GraphError(f"edge {e} oriented twice")
            chosen[e] = u < v
        missing = [e for e in host.edges() if e not in chosen]
        if missing:
            raise GraphError(f"edges left unoriented: {missing[:5]}")
        return cls(host, tuple(chosen[e] for e in host.edges()))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if d else (v, u) for (u, v), d in zip(self.host.edges(), self.direction)]

    def out_neighbors(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in range(self.host.n)]
        for u, v in self.arcs():
            out[u].add(v)
        return out

    def has_arc(self, u: int, v: int) -> bool:
        e = edge_id(u, v)
        d = self.direction[self.host.edges().index(e)]
        return d == (u < v)

    def to_digraph(self) -> "Digraph":
        return Digraph(self.host.n, frozenset(self.arcs()))


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph; opposite arc pairs are allowed."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc ({u}, {v}) out of range")
        object.__setattr__(self, "arcs", arcs)

    def out_neighbors(self, v: int) -> set[int]:
        return {b for a, b in self.arcs if a == v}

    def in_neighbors(self, v: int) -> set[int]:
        return {a for a, b in self.arcs if b == v}


def underlying_graph(d: Digraph) -> Graph:
    return Graph(d.n, {edge_id(u, v) for u, v in d.arcs})


def _semi_complete(d: Digraph, s: Iterable[int]) -> bool:
    return all((u, v) in d.arcs or (v, u) in d.arcs for u, v in combinations(sorted(s), 2))


def is_semi_complete(d: Digraph) -> bool:
    return _semi_complete(d, range(d.n))


def is_out_semi_complete(d: Digraph) -> bool:
    return all(_semi_complete(d, d.out_neighbors(v)) for v in range(d.n))


def semi_complete_in_vertices(d: Digraph) -> set[int]:
    """Vertices whose in-neighborhood is semi-complete."""
    return {v for v in range(d.n) if _semi_complete(d, d.in_neighbors(v))}


def holes(g: Graph, max_len: int | None = None, bound: int = HOLE_BOUND) -> Iterator[tuple[int, ...]]:
    """Chordless cycles of length >= 4, each once.

    A hole is reported starting at its smallest vertex, with the smaller of
    that vertex's two cycle neighbors second. Without ``max_len`` graphs above
    ``bound`` vertices are refused.
    """
    if max_len is None and g.n > bound:
        raise BoundExceededError(f"n={g.n} exceeds the hole enumeration bound {bound}; pass max_len")
    limit = g.n if max_len is None else max_len
    adj = [g.adj(v) for v in range(g.n)]

    # blocked: neighbors of the path's interior, i.e. everything but its two ends
    def extend(path: list[int], blocked: set[int]) -> Iterator[tuple[int, ...]]:
        s, last = path[0], path[-1]
        for u in sorted(adj[last]):
            if u <= s or u in path:
                continue
            if u in blocked:
                continue
            if s in adj[u]:
                if len(path) >= 3 and path[1] < u:
                    yield tuple(path) + (u,)
                continue
            if len(path) + 1 >= limit:
                continue
            path.append(u)
            yield from extend(path, blocked | adj[last])
            path.pop()

    for s in range(g.n):
        for a in sorted(adj[s]):
            if a <= s:
                continue
            yield from extend([s, a], set())


def _hole_is_cyclic(o_out: list[set[int]], hole: Sequence[int]) -> bool:
    k = len(hole)
    fwd = all(hole[(i + 1) % k] in o_out[hole[i]] for i in range(k))
    bwd = all(hole[i] in o_out[hole[(i + 1) % k]] for i in range(k))
    return fwd or bwd


@dataclass(frozen=True)
class HoleCyclicReport:
    hole_cyclic: bool
    complete: bool
    holes_checked: int
    violating_hole: tuple[int, ...] | None = None


def check_hole_cyclic(o: Orientation, max_len: int | None = None) -> HoleCyclicReport:
    """Hole-by-hole check; ``complete`` is False when ``max_len`` cut the enumeration short."""
    out = o.out_neighbors()
    count = 0
    for h in holes(o.host, max_len=max_len):
        count += 1
        if not _hole_is_cyclic(out, h):
            return HoleCyclicReport(False, max_len is None or max_len >= o.host.n, count, h)
    return HoleCyclicReport(True, max_len is None or max_len >= o.host.n, count)


def is_hole_cyclic(o: Orientation, max_len: int | None = None) -> bool:
    return check_hole_cyclic(o, max_len).hole_cyclic


def is_one_perfect(o: Orientation) -> bool:
    """Every out-neighborhood is a clique of the host."""
    g = o.host
    return all(g.is_clique(nb) for nb in o.out_neighbors())


@dataclass(frozen=True)
class TwoSatInstance:
    """Literals are ``+i`` / ``-i`` for variable ``i`` in ``1..num_vars``."""

    num_vars: int
    clauses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cl = tuple((int(a), int(b)) for a, b in self.clauses)
        for a, b in cl:
            for lit in (a, b):
                if lit == 0 or abs(lit) > self.num_vars:
                    raise GraphError(f"literal {lit} out of range")
        object.__setattr__(self, "clauses", cl)


def _tarjan_scc(n: int, succ: list[list[int]]) -> list[int]:
    """Component id per node; ids come out in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def two_sat_solve(inst: TwoSatInstance) -> list[bool] | None:
    """Satisfying assignment (index ``i-1`` for variable ``i``) or None.

    Implication graph plus strongly connected components.
    """
    nv = inst.num_vars

    def node(lit: int) -> int:
        return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    succ: list[list[int]] = [[] for _ in range(2 * nv)]
    for a, b in inst.clauses:
        succ[node(-a)].append(node(b))
        succ[node(-b)].append(node(a))
    comp = _tarjan_scc(2 * nv, succ)
    out = []
    for i in range(nv):
        pos, neg = comp[2 * i], comp[2 * i + 1]
        if pos == neg:
            return None
        # Tarjan numbers sinks first; pick the literal later in topological order
        out.append(pos < neg)
    return out


def one_perfect_two_sat(g: Graph) -> TwoSatInstance:
    """Variable ``i+1`` is True when ``g.edges()[i]`` points from low to high.

    For every vertex ``v`` and non-adjacent ``u, w`` in ``N(v)``: not both
    ``v -> u`` and ``v -> w``.
    """
    index = {e: i + 1 for i, e in enumerate(g.edges())}

    def out_lit(v: int, u: int) -> int:
        var = index[edge_id(v, u)]
        return var if v < u else -var

    clauses = []
    for v in range(g.n):
        for u, w in combinations(sorted(g.adj(v)), 2):
            if not g.has_edge(u, w):
                clauses.append((-out_lit(v, u), -out_lit(v, w)))
    return TwoSatInstance(len(index), tuple(clauses))


def recognize_one_perfectly_orientable(g: Graph) -> Orientation | None:
    """A 1-perfect orientation of ``g`` or None if none exists."""
    if g.m == 0:
        return Orientation(g, ())
    sol = two_sat_solve(one_perfect_two_sat(g))
    if sol is None:
        return None
    o = Orientation(g, tuple(sol))
    assert is_one_perfect(o)
    return o


def all_orientations(g: Graph, bound: int = BRUTE_FORCE_EDGE_BOUND) -> Iterator[Orientation]:
    if g.m > bound:
        raise BoundExceededError(f"m={g.m} exceeds the orientation brute-force bound {bound}")
    for bits in product((True, False), repeat=g.m):
        yield Orientation(g, bits)


def brute_force_one_perfect(g: Graph, bound: int = BRUTE_FORCE_EDGE_BOUND) -> Orientation | None:
    for o in all_orientations(g, bound):
        if is_one_perfect(o):
            return o
    return None


def brute_force_hole_cyclic(g: Graph, bound: int = BRUTE_FORCE_EDGE_BOUND) -> Orientation | None:
    """Some hole-cyclic orientation, by trying all ``2^m``; None if there is none."""
    hs = list(holes(g))
    for o in all_orientations(g, bound):
        out = o.out_neighbors()
        if all(_hole_is_cyclic(out, h) for h in hs):
            return o
    return None


def induced_four_cycles(g: Graph) -> list[tuple[int, ...]]:
    return [h for h in holes(g, max_len=4) if len(h) == 4]
