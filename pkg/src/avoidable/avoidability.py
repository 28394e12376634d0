"""Avoidable and simplicial vertices, edges and induced paths.

An induced path ``x - M - y`` (``M`` its interior, ``|M| >= 1``) closes to an
induced cycle exactly when ``x`` and ``y`` stay connected after deleting every
closed neighborhood of ``M`` except ``x`` and ``y`` themselves; a shortest
``x``-``y`` path in what remains completes the cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GraphError
from .graph import (
    Edge,
    Graph,
    connected_components,
    edge_id,
    is_induced_path,
    line_graph,
    shortest_path,
)

Path = tuple[int, ...]


@dataclass(frozen=True)
class ClosabilityCertificate:
    """Evidence for an avoidability verdict on ``path``.

    ``extension`` is the extension the verdict rests on: the lexicographically
    smallest failing one, or (when avoidable) the smallest extension with its
    closing ``cycle``. ``closings`` pairs every extension with a closing cycle
    when the path is avoidable.
    """

    path: Path
    avoidable: bool
    extension: Path | None = None
    cycle: Path | None = None
    failure_witness: Path | None = None
    closings: tuple[tuple[Path, Path], ...] = field(default=())

    def to_json(self) -> dict:
        witness: dict = {}
        if self.failure_witness is not None:
            witness["failing_extension"] = list(self.failure_witness)
        if self.closings:
            witness["closings"] = [
                {"extension": list(e), "cycle": list(c)} for e, c in self.closings
            ]
        if not self.closings and self.avoidable:
            witness["simplicial"] = True
        return witness


def _require_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def _require_induced(g: Graph, p: Sequence[int]) -> Path:
    p = tuple(int(v) for v in p)
    if not is_induced_path(g, p):
        raise GraphError(f"{list(p)} is not an induced path")
    return p


def _require_edge(g: Graph, e: Sequence[int]) -> Edge:
    u, v = edge_id(int(e[0]), int(e[1]))
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return u, v


def is_simplicial_vertex(g: Graph, v: int) -> bool:
    _require_vertex(g, v)
    return g.is_clique(g.adj(v))


def simplicial_vertices(g: Graph) -> set[int]:
    return {v for v in g.vertices() if g.is_clique(g.adj(v))}


def extensions(g: Graph, p: Sequence[int]) -> list[Path]:
    """All extensions ``(x, *p, y)`` of the induced path ``p``, sorted.

    For a single vertex each unordered pair ``{x, y}`` appears once, as ``x < y``.
    """
    p = _require_induced(g, p)
    first, last = p[0], p[-1]
    on_path = set(p)
    near_rest = set().union(*(g.adj(v) for v in p[1:])) if len(p) > 1 else set()
    near_init = set().union(*(g.adj(v) for v in p[:-1])) if len(p) > 1 else set()
    xs = sorted(g.adj(first) - on_path - near_rest)
    ys = sorted(g.adj(last) - on_path - near_init)
    out = []
    for x in xs:
        for y in ys:
            if x == y or g.has_edge(x, y):
                continue
            if len(p) == 1 and y < x:
                continue
            out.append((x, *p, y))
    return out


def is_simplicial_path(g: Graph, p: Sequence[int]) -> bool:
    return not extensions(g, p)


def close_extension(g: Graph, p: Sequence[int]) -> Path | None:
    """An induced cycle ``(p..., u_1, ..., u_q)`` through the induced path ``p``, or None."""
    p = _require_induced(g, p)
    if len(p) < 3:
        raise GraphError("closing needs an induced path with at least 3 vertices")
    x, y = p[0], p[-1]
    blocked = set()
    for w in p[1:-1]:
        blocked |= g.closed_adj(w)
    allowed = (set(range(g.n)) - blocked) | {x, y}
    q = shortest_path(g, y, x, allowed)
    if q is None:
        return None
    return p + tuple(q[1:-1])


def closes_to_cycle(g: Graph, p: Sequence[int]) -> bool:
    """Whether the (not necessarily induced) path ``p`` closes to a cycle.

    True if the ends are adjacent (and ``|p| >= 3``) or joined by a path that
    avoids the rest of ``p``.
    """
    p = tuple(p)
    if len(p) < 3 or len(set(p)) != len(p):
        raise GraphError("need a path on at least 3 distinct vertices")
    if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
        raise GraphError(f"{list(p)} is not a path")
    x, y = p[0], p[-1]
    if g.has_edge(x, y):
        return True
    allowed = (set(range(g.n)) - set(p)) | {x, y}
    return shortest_path(g, x, y, allowed) is not None


def is_avoidable_path(g: Graph, p: Sequence[int]) -> tuple[bool, ClosabilityCertificate]:
    """Every extension of ``p`` closes to an induced cycle."""
    p = _require_induced(g, p)
    closings = []
    for ext in extensions(g, p):
        cycle = close_extension(g, ext)
        if cycle is None:
            return False, ClosabilityCertificate(
                p, False, extension=ext, failure_witness=ext
            )
        closings.append((ext, cycle))
    if not closings:
        return True, ClosabilityCertificate(p, True)
    ext, cycle = closings[0]
    return True, ClosabilityCertificate(p, True, ext, cycle, None, tuple(closings))


def _outside_components(g: Graph, v: int) -> dict[int, set[int]]:
    """Map each neighbor of ``v`` to the ids of components of ``G - N[v]`` it touches."""
    comps = connected_components(g, set(range(g.n)) - g.closed_adj(v)) if g.n > 1 else []
    label = {}
    for i, comp in enumerate(comps):
        for u in comp:
            label[u] = i
    return {x: {label[u] for u in g.adj(x) if u in label} for x in g.adj(v)}


def is_avoidable_vertex(g: Graph, v: int) -> bool:
    """Every pair of non-adjacent neighbors of ``v`` is joined through ``G - N[v]``."""
    _require_vertex(g, v)
    nb = sorted(g.adj(v))
    if len(nb) <= 1:
        return True
    touch = _outside_components(g, v)
    for i, x in enumerate(nb):
        for y in nb[i + 1:]:
            if not g.has_edge(x, y) and not touch[x] & touch[y]:
                return False
    return True


def avoidable_vertices(g: Graph) -> set[int]:
    return {v for v in g.vertices() if is_avoidable_vertex(g, v)}


def closed_neighborhood_is_pmc(g: Graph, v: int) -> bool:
    """``N[v]`` is a potential maximal clique exactly when ``v`` is avoidable."""
    return is_avoidable_vertex(g, v)


def is_avoidable_edge(g: Graph, e: Sequence[int]) -> bool:
    u, v = _require_edge(g, e)
    return is_avoidable_path(g, (u, v))[0]


def avoidable_edges(g: Graph) -> set[Edge]:
    return {e for e in g.edges() if is_avoidable_path(g, e)[0]}


def is_simplicial_edge(g: Graph, e: Sequence[int]) -> bool:
    u, v = _require_edge(g, e)
    return not extensions(g, (u, v))


def is_pseudo_avoidable_edge(g: Graph, e: Sequence[int]) -> bool:
    """The vertex standing for ``e`` in the line graph is avoidable."""
    e = _require_edge(g, e)
    lg, edges = line_graph(g)
    return is_avoidable_vertex(lg, edges.index(e))


def is_bisimplicial_edge(g: Graph, e: Sequence[int]) -> bool:
    """Every neighbor of ``u`` (other than ``v``) is adjacent to every other neighbor of ``v``.

    In a bipartite graph this says ``N(u) | N(v)`` induces a complete bipartite
    graph; in general it forbids any induced ``P_4`` with middle edge ``uv``.
    """
    u, v = _require_edge(g, e)
    for x in g.adj(u) - {v}:
        for y in g.adj(v) - {u}:
            if x != y and not g.has_edge(x, y):
                return False
    return True
