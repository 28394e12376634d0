import networkx as nx
import pytest
from hypothesis import given

from avoidable.avoidability import (
    avoidable_edges,
    avoidable_vertices,
    close_extension,
    closed_neighborhood_is_pmc,
    closes_to_cycle,
    extensions,
    is_avoidable_edge,
    is_avoidable_path,
    is_avoidable_vertex,
    is_bisimplicial_edge,
    is_pseudo_avoidable_edge,
    is_simplicial_edge,
    is_simplicial_path,
    is_simplicial_vertex,
    simplicial_vertices,
)
from avoidable.errors import GraphError
from avoidable.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    is_induced_cycle,
    path_graph,
    petersen_graph,
)
from avoidable.lab.fixtures import load_fixture
from avoidable.lab.generators import all_labeled_graphs, random_chordal
from avoidable.lab.symmetry import induced_paths

from .helpers import graphs, to_nx

BULL = Graph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])


def hole_sets(g: Graph) -> list[frozenset[int]]:
    return [frozenset(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4]


def brute_avoidable(g: Graph, p) -> bool:
    holes = hole_sets(g)
    return all(any(set(ext) <= h for h in holes) for ext in extensions(g, p))


def all_induced_paths(g: Graph, k: int):
    return [(v,) for v in g.vertices()] if k == 1 else list(induced_paths(g, k))


class TestSimplicial:
    def test_vertices(self):
        assert all(is_simplicial_vertex(complete_graph(4), v) for v in range(4))
        assert not is_simplicial_vertex(path_graph(3), 1)
        assert is_simplicial_vertex(load_fixture("fig2_G").graph, 3)
        with pytest.raises(GraphError):
            is_simplicial_vertex(path_graph(3), 5)

    def test_simplicial_set_on_chordal_equals_avoidable(self):
        for seed in range(40):
            g = random_chordal(12, seed)
            assert avoidable_vertices(g) == simplicial_vertices(g)


class TestExtensions:
    def test_single_vertex_gives_p3s(self):
        g = cycle_graph(5)
        assert extensions(g, (0,)) == [(1, 0, 4)]
        assert extensions(complete_graph(3), (0,)) == []

    def test_fig2_f_simplicial(self, fig2):
        assert extensions(fig2.graph, fig2.annotations["edges"]["f"]) == []
        assert is_simplicial_path(fig2.graph, fig2.annotations["edges"]["f"])

    def test_middle_edge_of_p4(self):
        assert extensions(path_graph(4), (1, 2)) == [(0, 1, 2, 3)]

    def test_requires_induced(self):
        with pytest.raises(GraphError):
            extensions(cycle_graph(3), (0, 1, 2))

    @given(graphs(max_n=8))
    def test_extensions_are_induced_and_sorted(self, g):
        from avoidable.graph import is_induced_path

        for k in (1, 2, 3):
            for p in all_induced_paths(g, k):
                ext = extensions(g, p)
                assert ext == sorted(ext)
                assert all(is_induced_path(g, e) and e[1:-1] == p for e in ext)


class TestClosing:
    def test_cycle_closes_itself(self):
        for n in range(4, 9):
            c = close_extension(cycle_graph(n), (0, 1, 2))
            assert c is not None and sorted(c) == list(range(n))

    def test_fig5_and_fig3_do_not_close(self):
        f5 = load_fixture("fig5_circulant")
        assert close_extension(f5.graph, f5.annotations["path"]) is None
        f3 = load_fixture("fig3_prism")
        assert close_extension(f3.graph, f3.annotations["path"]) is None

    def test_short_path_rejected(self):
        with pytest.raises(GraphError):
            close_extension(path_graph(3), (0, 1))

    @given(graphs(max_n=8))
    def test_deletion_criterion_matches_cycle_enumeration(self, g):
        holes = hole_sets(g)
        for k in (3, 4):
            for p in all_induced_paths(g, k):
                c = close_extension(g, p)
                assert (c is not None) == any(set(p) <= h for h in holes)
                if c is not None:
                    assert is_induced_cycle(g, c) and c[:k] == p and len(c) > k

    def test_not_necessarily_induced(self):
        assert closes_to_cycle(cycle_graph(4), (0, 1, 2))
        assert not closes_to_cycle(path_graph(4), (0, 1, 2, 3))
        assert closes_to_cycle(complete_graph(4), (0, 1, 2, 3))
        with pytest.raises(GraphError):
            closes_to_cycle(path_graph(4), (0, 2, 3))


class TestAvoidablePaths:
    def test_fig5_p3(self):
        fx = load_fixture("fig5_circulant")
        p = fx.annotations["path"]
        ok, cert = is_avoidable_path(fx.graph, p[1:4])
        assert not ok and cert.failure_witness == p

    def test_simplicial_vacuous(self):
        ok, cert = is_avoidable_path(complete_graph(3), (0, 1))
        assert ok and cert.closings == () and cert.to_json() == {"simplicial": True}

    def test_petersen_vertices(self):
        assert avoidable_vertices(petersen_graph()) == set(range(10))

    @given(graphs(max_n=8))
    def test_against_brute_force(self, g):
        for k in (1, 2, 3):
            for p in all_induced_paths(g, k):
                ok, cert = is_avoidable_path(g, p)
                assert ok == brute_avoidable(g, p)
                if ok:
                    assert [e for e, _ in cert.closings] == extensions(g, p)
                    for ext, cyc in cert.closings:
                        assert is_induced_cycle(g, cyc) and cyc[: len(ext)] == ext
                else:
                    failing = [e for e in extensions(g, p) if close_extension(g, e) is None]
                    assert cert.failure_witness == failing[0]


class TestVertices:
    def test_fig1(self):
        fx = load_fixture("fig1a")
        assert is_avoidable_vertex(fx.graph, fx.annotations["a"])
        assert closed_neighborhood_is_pmc(fx.graph, fx.annotations["a"])
        assert avoidable_vertices(load_fixture("fig1b").graph) == set(range(5))

    def test_p5(self):
        assert avoidable_vertices(path_graph(5)) == {0, 4}
        assert not closed_neighborhood_is_pmc(path_graph(5), 2)

    @given(graphs(max_n=9))
    def test_matches_path_version(self, g):
        assert avoidable_vertices(g) == {v for v in g.vertices() if is_avoidable_path(g, (v,))[0]}

    def test_non_universal_vertices_exhaustive(self):
        for n in range(1, 6):
            for g in all_labeled_graphs(n):
                av = avoidable_vertices(g)
                assert av
                for v in g.vertices():
                    if g.degree(v) < n - 1:
                        assert av - g.closed_adj(v)


class TestEdges:
    def test_fig2(self, fig2):
        e, f = fig2.annotations["edges"]["e"], fig2.annotations["edges"]["f"]
        assert not is_avoidable_edge(fig2.graph, e)
        assert is_avoidable_edge(fig2.graph, f)
        assert is_pseudo_avoidable_edge(fig2.graph, e)
        assert not is_pseudo_avoidable_edge(fig2.graph, f)

    def test_complete(self):
        assert avoidable_edges(complete_graph(4)) == set(complete_graph(4).edges())
        assert is_pseudo_avoidable_edge(path_graph(2), (0, 1))

    def test_not_an_edge(self):
        with pytest.raises(GraphError):
            is_avoidable_edge(path_graph(3), (0, 2))

    @given(graphs(max_n=8))
    def test_counts_and_simplicial_implication(self, g):
        av = avoidable_edges(g)
        if g.m >= 1:
            assert len(av) >= min(g.m, 2)
        for e in g.edges():
            if is_simplicial_edge(g, e):
                assert e in av

    @given(graphs(max_n=8))
    def test_independent_avoidable_edge(self, g):
        av = avoidable_edges(g)
        for e in g.edges():
            independent = [
                f for f in g.edges()
                if not set(f) & set(e) and not any(g.has_edge(a, b) for a in e for b in f)
            ]
            if independent:
                assert any(f in av for f in independent)

    @given(graphs(max_n=7))
    def test_pseudo_avoidable_means_three_edge_paths_close(self, g):
        for e in g.edges():
            u, v = e
            walks = [
                (x, a, b, y)
                for a, b in ((u, v), (v, u))
                for x in g.adj(a) - {b}
                for y in g.adj(b) - {a}
                if x != y
            ]
            assert is_pseudo_avoidable_edge(g, e) == all(closes_to_cycle(g, w) for w in walks)


class TestBisimplicialEdge:
    def test_examples(self):
        assert is_bisimplicial_edge(cycle_graph(4), (1, 2))
        assert is_bisimplicial_edge(complete_graph(3), (0, 1))
        assert not is_bisimplicial_edge(BULL, (1, 2))

    @given(graphs(max_n=8))
    def test_bipartite_reading(self, g):
        h = to_nx(g)
        if not nx.is_bipartite(h):
            return
        # in a bipartite graph N(u) and N(v) are independent, so the edge is
        # bisimplicial iff they are completely joined
        for u, v in g.edges():
            complete = all(g.has_edge(x, y) for x in g.adj(v) for y in g.adj(u))
            assert is_bisimplicial_edge(g, (u, v)) == complete

    def test_no_induced_p4_through_bisimplicial_edge(self):
        for g in all_labeled_graphs(5):
            for e in g.edges():
                if is_bisimplicial_edge(g, e):
                    assert all(
                        set(p[1:3]) != set(e) for p in induced_paths(g, 4)
                    )
