"""The small graphs drawn in the figures, with their distinguished parts.

Vertex ids are frozen so that certificates and golden files stay stable.
Structural annotations (paths induced, arcs on edges, symmetry) are checked
when a fixture is loaded; :func:`verify_fixture` re-derives every claim the
figure makes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ..avoidability import (
    avoidable_vertices,
    close_extension,
    closes_to_cycle,
    is_avoidable_edge,
    is_avoidable_path,
    is_avoidable_vertex,
    is_pseudo_avoidable_edge,
    is_simplicial_edge,
)
from ..clique import is_bisimplicial_elimination_ordering
from ..errors import GraphError
from ..graph import Graph, circulant, complete_bipartite, is_induced_path, line_graph, petersen_graph
from ..orientation import (
    Orientation,
    brute_force_one_perfect,
    is_hole_cyclic,
    recognize_one_perfectly_orientable,
)
from ..search import lbfs, lbfs_all_end_vertices, mcs_all_end_vertices
from .conjecture import check_conjecture
from .symmetry import automorphisms, is_edge_transitive, is_vertex_transitive, verify_transitive_corollaries

FIXTURE_NAMES = ("fig1a", "fig1b", "fig2_G", "fig2_LG", "fig3_prism", "fig4", "fig5_circulant", "petersen")

LETTERS = "abcdefg"
FIG2_EDGES = {"a": (0, 1), "b": (2, 3), "c": (0, 4), "d": (1, 4), "e": (1, 2), "f": (2, 4), "g": (3, 4)}
# fig2_LG as drawn, vertices a..g as 0..6
FIG2_LG_EDGES = [
    "ad", "df", "fb", "be", "ea", "ac", "cd", "dg", "gc", "cf", "fe", "ed", "gb", "fg",
]
# K_{2,3} with parts {0, 1} and {2, 3, 4}; edge labels used by fig3_prism
FIG3_BASE_EDGES = {"a": (0, 2), "b": (1, 2), "c": (0, 3), "d": (1, 3), "e": (0, 4), "f": (1, 4)}
FIG3_PRISM_EDGES = ["ac", "cd", "df", "db", "bf", "fe", "ec", "ea", "ab"]


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    annotations: dict[str, Any] = field(default_factory=dict)


def _lettered(n: int, pairs: list[str]) -> Graph:
    return Graph(n, [(LETTERS.index(p[0]), LETTERS.index(p[1])) for p in pairs])


def _build(name: str) -> Fixture:
    if name == "fig1a":
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)])
        return Fixture(name, g, {"a": 3})
    if name == "fig1b":
        g = Graph(5, [(0, 2), (2, 1), (1, 3), (3, 0), (0, 4), (4, 1)])
        return Fixture(name, g, {"x1": 0, "x2": 1})
    if name == "fig2_G":
        return Fixture(name, Graph(5, FIG2_EDGES.values()), {"edges": dict(FIG2_EDGES)})
    if name == "fig2_LG":
        return Fixture(name, _lettered(7, FIG2_LG_EDGES), {"labels": LETTERS[:7]})
    if name == "fig3_prism":
        g = _lettered(6, FIG3_PRISM_EDGES)
        return Fixture(name, g, {
            "labels": LETTERS[:6],
            "path": (0, 2, 3, 5),
            "base_edges": dict(FIG3_BASE_EDGES),
            "base_path": (4, 1, 3, 0, 2),
        })
    if name == "fig4":
        arcs = [(2, 4), (4, 5), (5, 3), (1, 3), (0, 1), (2, 0), (3, 2)]
        g = Graph(6, arcs)
        return Fixture(name, g, {"arcs": arcs})
    if name == "fig5_circulant":
        return Fixture(name, circulant(13, [1, 5]), {"jumps": (1, 5), "path": (0, 12, 4, 9, 10)})
    if name == "petersen":
        return Fixture(name, petersen_graph(), {})
    raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def _check_structure(fx: Fixture) -> None:
    g, ann = fx.graph, fx.annotations
    if "path" in ann and not is_induced_path(g, ann["path"]):
        raise GraphError(f"{fx.name}: annotated path is not induced")
    if "arcs" in ann:
        Orientation.from_arcs(g, ann["arcs"])
    if fx.name == "fig3_prism":
        base = complete_bipartite(2, 3)
        if set(ann["base_edges"].values()) != set(base.edges()):
            raise GraphError("fig3_prism: edge labels do not cover K_{2,3}")
    if fx.name == "fig5_circulant" and not is_edge_transitive(g):
        raise GraphError("fig5_circulant: expected an edge-transitive graph")


def load_fixture(name: str) -> Fixture:
    fx = _build(name)
    _check_structure(fx)
    return fx


def _relabelled_line_graph(base: Graph, labelled: dict[str, tuple[int, int]]) -> Graph:
    lg, edges = line_graph(base)
    names = sorted(labelled)
    to_letter = {edges.index(tuple(sorted(labelled[c]))): names.index(c) for c in names}
    return Graph(lg.n, [(to_letter[u], to_letter[v]) for u, v in lg.edges()])


def _claims(fx: Fixture) -> list[tuple[str, Callable[[], bool]]]:
    g, ann = fx.graph, fx.annotations
    if fx.name == "fig1a":
        a = ann["a"]
        return [
            ("a is avoidable", lambda: is_avoidable_vertex(g, a)),
            ("a is never the last vertex of an LBFS", lambda: a not in lbfs_all_end_vertices(g)),
            ("avoidable vertices are exactly the MCS end vertices",
             lambda: avoidable_vertices(g) == mcs_all_end_vertices(g)),
        ]
    if fx.name == "fig1b":
        x = (ann["x1"], ann["x2"])
        return [
            ("every vertex is avoidable", lambda: avoidable_vertices(g) == set(g.vertices())),
            ("neither x1 nor x2 is the last vertex of an MCS",
             lambda: not set(x) & mcs_all_end_vertices(g)),
        ]
    if fx.name == "fig2_G":
        e, f = ann["edges"]["e"], ann["edges"]["f"]
        return [
            ("e is not an avoidable edge", lambda: not is_avoidable_edge(g, e)),
            ("e is pseudo-avoidable", lambda: is_pseudo_avoidable_edge(g, e)),
            ("f is a simplicial edge", lambda: is_simplicial_edge(g, f)),
            ("f is an avoidable edge", lambda: is_avoidable_edge(g, f)),
            ("f is not pseudo-avoidable", lambda: not is_pseudo_avoidable_edge(g, f)),
        ]
    if fx.name == "fig2_LG":
        base = load_fixture("fig2_G")
        return [("drawing equals the line graph of fig2_G",
                  lambda: _relabelled_line_graph(base.graph, base.annotations["edges"]) == g)]
    if fx.name == "fig3_prism":
        base = complete_bipartite(2, 3)
        return [
            ("drawing equals the line graph of K_{2,3}",
             lambda: _relabelled_line_graph(base, ann["base_edges"]) == g),
            ("vertex-transitive", lambda: is_vertex_transitive(g)),
            ("12 automorphisms", lambda: len(automorphisms(g)) == 12),
            ("every induced P3 closes", lambda: verify_transitive_corollaries(g).p3_close is True),
            ("induced P4 (a,c,d,f) does not close", lambda: close_extension(g, ann["path"]) is None),
            ("the matching 4-edge path of K_{2,3} does not close",
             lambda: not closes_to_cycle(base, ann["base_path"])),
        ]
    if fx.name == "fig4":
        o = Orientation.from_arcs(g, ann["arcs"])
        return [
            ("drawn orientation is hole-cyclic", lambda: is_hole_cyclic(o)),
            ("2-SAT recognizer finds no 1-perfect orientation",
             lambda: recognize_one_perfectly_orientable(g) is None),
            ("no 1-perfect orientation among all 2^7", lambda: brute_force_one_perfect(g) is None),
            ("LBFS is a bisimplicial elimination ordering",
             lambda: is_bisimplicial_elimination_ordering(g, lbfs(g).sequence)),
        ]
    if fx.name == "fig5_circulant":
        p = ann["path"]
        return [
            ("edge-transitive", lambda: is_edge_transitive(g)),
            ("every induced P4 closes", lambda: verify_transitive_corollaries(g).p4_close is True),
            ("the induced P5 does not close", lambda: close_extension(g, p) is None),
            ("its middle P3 is not avoidable", lambda: not is_avoidable_path(g, p[1:4])[0]),
            ("some induced P3 is avoidable", lambda: check_conjecture(g, 3) is None),
        ]
    if fx.name == "petersen":
        return [("symmetric path checks pass", lambda: verify_transitive_corollaries(g).passed)]
    return []


def verify_fixture(name: str) -> list[tuple[str, bool]]:
    """Every claim attached to the figure, with its verdict."""
    fx = load_fixture(name)
    return [(label, bool(check())) for label, check in _claims(fx)]
