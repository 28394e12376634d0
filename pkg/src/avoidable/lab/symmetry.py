"""Automorphisms, transitivity, and the path-closing consequences of symmetry."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from ..avoidability import close_extension, closes_to_cycle
from ..errors import BoundExceededError
from ..graph import Graph, is_induced_path

AUTOMORPHISM_BOUND = 14
Perm = tuple[int, ...]


def _signatures(g: Graph) -> list[tuple]:
    """Degree plus the sorted multiset of neighbor degrees; automorphisms preserve it."""
    return [(g.degree(v), tuple(sorted(g.degree(u) for u in g.adj(v)))) for v in range(g.n)]


def _extend(g: Graph, sig: list[tuple], image: list[int], used: set[int], v: int) -> Iterator[Perm]:
    if v == g.n:
        yield tuple(image)
        return
    if image[v] >= 0:
        yield from _extend(g, sig, image, used, v + 1)
        return
    for w in range(g.n):
        if w in used or sig[w] != sig[v]:
            continue
        # every already-mapped vertex must keep its (non-)adjacency to v
        if any(image[u] >= 0 and g.has_edge(u, v) != g.has_edge(image[u], w) for u in range(g.n)):
            continue
        image[v] = w
        used.add(w)
        yield from _extend(g, sig, image, used, v + 1)
        used.discard(w)
        image[v] = -1


def _consistent(g: Graph, pairs: dict[int, int]) -> bool:
    items = list(pairs.items())
    return all(g.has_edge(a, b) == g.has_edge(x, y) for (a, x), (b, y) in combinations(items, 2))


def _search(g: Graph, fixed: dict[int, int]) -> Iterator[Perm]:
    if g.n > AUTOMORPHISM_BOUND:
        raise BoundExceededError(f"n={g.n} exceeds the automorphism bound {AUTOMORPHISM_BOUND}")
    sig = _signatures(g)
    if any(sig[a] != sig[b] for a, b in fixed.items()) or len(set(fixed.values())) != len(fixed):
        return
    if not _consistent(g, fixed):
        return
    image = [-1] * g.n
    for a, b in fixed.items():
        image[a] = b
    yield from _extend(g, sig, image, set(fixed.values()), 0)


def automorphisms(g: Graph) -> list[Perm]:
    """The full automorphism group as permutations ``p`` (vertex ``v`` maps to ``p[v]``)."""
    return list(_search(g, {}))


def _maps(g: Graph, fixed: dict[int, int]) -> bool:
    return next(_search(g, fixed), None) is not None


def is_vertex_transitive(g: Graph) -> bool:
    """Vertex 0 can be sent to every vertex."""
    if g.n > AUTOMORPHISM_BOUND:
        raise BoundExceededError(f"n={g.n} exceeds the automorphism bound {AUTOMORPHISM_BOUND}")
    return all(_maps(g, {0: v}) for v in range(g.n))


def is_edge_transitive(g: Graph) -> bool:
    """The first edge can be sent to every edge, in one of its two directions."""
    if g.n > AUTOMORPHISM_BOUND:
        raise BoundExceededError(f"n={g.n} exceeds the automorphism bound {AUTOMORPHISM_BOUND}")
    edges = g.edges()
    if not edges:
        return True
    a, b = edges[0]
    return all(_maps(g, {a: x, b: y}) or _maps(g, {a: y, b: x}) for x, y in edges)


def simple_paths(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Paths on ``k`` distinct vertices (not necessarily induced), each once, first end smaller."""

    def grow(path: list[int]) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        for u in sorted(g.adj(path[-1])):
            if u not in path:
                path.append(u)
                yield from grow(path)
                path.pop()

    for s in range(g.n):
        yield from grow([s])


def induced_paths(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    for p in simple_paths(g, k):
        if is_induced_path(g, p):
            yield p


@dataclass(frozen=True)
class TransitivityReport:
    """``None`` marks a check that does not apply (the symmetry is absent)."""

    vertex_transitive: bool
    edge_transitive: bool
    p3_close: bool | None
    three_edge_paths_close: bool | None
    p4_close: bool | None
    failures: tuple[tuple[str, tuple[int, ...]], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "vertex_transitive": self.vertex_transitive,
            "edge_transitive": self.edge_transitive,
            "p3_close": self.p3_close,
            "three_edge_paths_close": self.three_edge_paths_close,
            "p4_close": self.p4_close,
            "failures": [{"check": c, "path": list(p)} for c, p in self.failures],
        }


def verify_transitive_corollaries(g: Graph) -> TransitivityReport:
    """Exhaustive path checks implied by vertex- and edge-transitivity."""
    vt = is_vertex_transitive(g)
    et = is_edge_transitive(g)
    failures: list[tuple[str, tuple[int, ...]]] = []

    def run(name: str, paths, ok) -> bool:
        good = True
        for p in paths:
            if not ok(p):
                failures.append((name, p))
                good = False
        return good

    p3 = run("p3_close", induced_paths(g, 3), lambda p: close_extension(g, p) is not None) if vt else None
    three = run("three_edge_paths_close", simple_paths(g, 4), lambda p: closes_to_cycle(g, p)) if et else None
    p4 = run("p4_close", induced_paths(g, 4), lambda p: close_extension(g, p) is not None) if et else None
    return TransitivityReport(vt, et, p3, three, p4, tuple(failures))

