import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from avoidable.errors import GraphError, ParseError
from avoidable.graph import (
    Graph,
    WeightedGraph,
    circulant,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    distances_from,
    eccentricity,
    empty_graph,
    induced_subgraph,
    is_induced_cycle,
    is_induced_path,
    line_graph,
    path_graph,
)
from avoidable.io import (
    detect_format,
    encode_dimacs,
    encode_edge_list,
    encode_graph6,
    encode_json_graph,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_json_graph,
    parse_weights,
)
from avoidable.lab.fixtures import load_fixture
from avoidable.lab.generators import all_labeled_graphs

from .helpers import graphs, to_nx


class TestGraph:
    def test_rejects_loops_and_range(self):
        with pytest.raises(GraphError):
            Graph(3, [(1, 1)])
        with pytest.raises(GraphError):
            Graph(3, [(0, 3)])
        with pytest.raises(GraphError):
            Graph(0)

    def test_duplicates_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1 and g.edges() == [(0, 1)]

    def test_from_adjacency_checks_symmetry(self):
        with pytest.raises(GraphError):
            Graph.from_adjacency([[1], []])
        assert Graph.from_adjacency([[1], [0]]) == path_graph(2)

    def test_edge_array_matches_sets(self):
        import numpy as np

        g = cycle_graph(7)
        h = Graph.from_edge_array(7, np.array(g.edges()[::-1]))
        assert h == g and h.degree(3) == 2

    def test_weighted_validation(self):
        with pytest.raises(GraphError):
            WeightedGraph(path_graph(2), (1,))
        with pytest.raises(GraphError):
            WeightedGraph(path_graph(2), (1, -1))
        assert WeightedGraph.uniform(path_graph(3), 2).weight_of([0, 2]) == 4

    def test_induced_path_and_cycle(self):
        c = cycle_graph(5)
        assert is_induced_path(c, (0, 1, 2, 3))
        assert not is_induced_path(c, (0, 1, 2, 3, 4))
        assert is_induced_cycle(c, (0, 1, 2, 3, 4))
        assert not is_induced_cycle(complete_graph(4), (0, 1, 2, 3))


class TestGraph6:
    def test_k3(self):
        g = parse_graph6(encode_graph6(complete_graph(3)))
        assert g.m == 3

    def test_named_string_round_trip(self):
        g = parse_graph6("D?{")
        assert g.n == 5 and encode_graph6(g) == "D?{"
        assert to_nx(g).edges == nx.from_graph6_bytes(b"D?{").edges

    def test_circulant(self):
        c = circulant(13, [1, 5])
        back = parse_graph6(encode_graph6(c))
        assert back == c and back.n == 13 and back.m == 26

    def test_exhaustive_round_trip(self):
        for n in range(1, 6):
            for g in all_labeled_graphs(n):
                assert parse_graph6(encode_graph6(g)) == g

    @given(graphs(max_n=70))
    def test_matches_networkx(self, g):
        assert encode_graph6(g).encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()

    def test_large_header(self):
        g = path_graph(100)
        assert parse_graph6(encode_graph6(g)) == g

    @pytest.mark.parametrize(
        "text, offset",
        [("", 0), ("D?", 2), ("D?{?", 3), ("D ?{", 1), ("D?}", 2), (":Fa@x^", 0)],
    )
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_graph6(text)
        assert info.value.offset == offset


class TestTextFormats:
    def test_edge_list(self):
        assert parse_edge_list("3\n0 1\n1 2") == path_graph(3)
        assert parse_edge_list("4\n") == empty_graph(4)

    def test_edge_list_errors(self):
        for bad in ("3\n0 0", "3\n0 3", "", "x\n"):
            with pytest.raises(ParseError):
                parse_edge_list(bad)

    def test_dimacs_fig2(self, fig2):
        text = "c fig 2\np edge 5 7\n" + "".join(
            f"e {a} {b}\n" for a, b in [(1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (2, 5), (1, 5)]
        )
        assert parse_dimacs(text) == fig2.graph

    def test_dimacs_errors(self):
        for bad in ("e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 1 1\n"):
            with pytest.raises(ParseError):
                parse_dimacs(bad)

    @given(graphs())
    def test_round_trips(self, g):
        assert parse_dimacs(encode_dimacs(g)) == g
        assert parse_edge_list(encode_edge_list(g)) == g
        assert parse_json_graph(encode_json_graph(g))[0] == g

    def test_weights(self):
        assert parse_weights("0 5\n2 7\n", 3) == (5, 1, 7)
        with pytest.raises(ParseError):
            parse_weights("3 1\n", 3)
        with pytest.raises(ParseError):
            parse_weights("0 -1\n", 3)

    def test_json_weights(self):
        g, w = parse_json_graph('{"n": 2, "edges": [[0, 1]], "weights": [3, 4]}')
        assert g == path_graph(2) and w == (3, 4)

    def test_detect_format(self):
        assert detect_format("x.g6") == "graph6"
        assert detect_format("x.dimacs") == "dimacs"
        assert detect_format("x.txt") == "edgelist"
        with pytest.raises(ParseError):
            detect_format("x.unknown")
        with pytest.raises(ParseError):
            parse_graph("D?{\nD?{\n", "graph6")


class TestConstructions:
    def test_complement(self):
        assert complement(complete_graph(4)) == empty_graph(4)
        c5 = complement(cycle_graph(5))
        assert nx.is_isomorphic(to_nx(c5), to_nx(cycle_graph(5)))

    def test_complement_involution_exhaustive(self):
        for n in range(1, 7):
            for g in all_labeled_graphs(n):
                assert complement(complement(g)) == g

    def test_line_graph_fig2(self):
        g = load_fixture("fig2_G")
        lg, edges = line_graph(g.graph)
        e = edges.index(g.annotations["edges"]["e"])
        names = {edges.index(v): k for k, v in g.annotations["edges"].items()}
        assert {names[u] for u in lg.adj(e)} == {"a", "b", "d", "f"}

    def test_line_graph_k23_is_prism(self):
        lg, _ = line_graph(complete_bipartite(2, 3))
        assert (lg.n, lg.m) == (6, 9)
        assert nx.is_isomorphic(to_nx(lg), nx.circular_ladder_graph(3))

    def test_line_graph_p3_and_edgeless(self):
        assert line_graph(path_graph(3))[0] == path_graph(2)
        with pytest.raises(GraphError):
            line_graph(empty_graph(3))

    @given(graphs(min_n=2))
    def test_line_graph_counts(self, g):
        if g.m == 0:
            return
        lg, _ = line_graph(g)
        assert lg.n == g.m
        assert lg.m == sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in g.vertices())
        assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))

    def test_induced_subgraph(self):
        g = cycle_graph(5)
        assert induced_subgraph(g, range(5))[0] == g
        assert induced_subgraph(g, [1, 2, 3])[0] == path_graph(3)
        sub, remap = induced_subgraph(load_fixture("fig2_G").graph, [1, 3, 4])
        assert remap == [1, 3, 4]
        assert set(sub.edges()) == {(0, 2), (1, 2)}
        with pytest.raises(GraphError):
            induced_subgraph(g, [])


class TestMetrics:
    def test_path_and_complete(self):
        assert distances_from(path_graph(4), 0)[3] == 3
        assert diameter(path_graph(4)) == 3
        assert diameter(complete_graph(5)) == 1

    def test_fig1a_diameter(self):
        # the path 0-1-2-4-5 spans four edges
        g = load_fixture("fig1a").graph
        assert diameter(g) == 4 and eccentricity(g, 2) == 2

    def test_disconnected_sentinel(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert distances_from(g, 0)[2] == math.inf
        assert diameter(g) == math.inf

    def test_components(self):
        assert connected_components(cycle_graph(4)) == [[0, 1, 2, 3]]
        assert connected_components(Graph(4, [(0, 2), (1, 3)])) == [[0, 2], [1, 3]]
        g = load_fixture("fig1a").graph
        rest = set(range(6)) - g.closed_adj(2)
        assert connected_components(g, rest) == [[0], [5]]

    @given(graphs())
    def test_bfs_against_networkx(self, g):
        h = to_nx(g)
        for s in g.vertices():
            d = distances_from(g, s)
            ref = nx.single_source_shortest_path_length(h, s)
            assert d[s] == 0
            assert all(d[v] == ref.get(v, math.inf) for v in g.vertices())
            for u, v in combinations(g.vertices(), 2):
                assert d[v] <= d[u] + distances_from(g, u)[v]
