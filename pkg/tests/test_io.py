import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from itertools import combinations

from tperfect.core import Graph, complete_graph, squared_cycle
from tperfect.errors import GraphInputError
from tperfect.io import (
    GraphDocument,
    graph6_to_graph,
    graph_to_graph6,
    parse,
    serialize,
)


class TestEdgeList:
    def test_triangle(self):
        g = parse(GraphDocument("edge-list", "3 3\n0 1\n1 2\n2 0\n"))
        assert g == complete_graph(3)

    def test_loop_rejected(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("edge-list", "2 1\n0 0\n"))

    def test_duplicate_rejected(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("edge-list", "2 2\n0 1\n1 0\n"))

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("edge-list", "2 1\n0 5\n"))

    def test_malformed_header(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("edge-list", "3\n0 1\n"))

    def test_wrong_edge_count(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("edge-list", "3 2\n0 1\n"))


class TestGraph6:
    def test_five_isolated_vertices(self):
        g = graph6_to_graph("D??")
        assert g.n == 5 and g.m == 0

    def test_reference_encodings(self):
        # frozen from an independent encoder (networkx.to_graph6_bytes)
        from tperfect.core import cycle_graph, wheel_5

        assert graph_to_graph6(complete_graph(4)) == "C~"
        assert graph_to_graph6(cycle_graph(5)) == "Dhc"
        assert graph_to_graph6(squared_cycle(7)) == "FzM]W"
        assert graph_to_graph6(wheel_5()) == "Ehfw"

    def test_known_encoding_round_trips(self):
        for g in (complete_graph(4), squared_cycle(7), Graph(1), Graph(5)):
            assert graph6_to_graph(graph_to_graph6(g)) == g

    def test_header_prefix_allowed(self):
        s = ">>graph6<<" + graph_to_graph6(complete_graph(4))
        assert graph6_to_graph(s) == complete_graph(4)

    def test_large_graph_header(self):
        g = Graph(100, [(i, i + 1) for i in range(99)])
        s = graph_to_graph6(g)
        assert s.startswith("~")
        assert graph6_to_graph(s) == g

    def test_bad_byte_rejected(self):
        with pytest.raises(GraphInputError):
            graph6_to_graph("C" + chr(10))

    def test_truncated_rejected(self):
        s = graph_to_graph6(squared_cycle(7))
        with pytest.raises(GraphInputError):
            graph6_to_graph(s[:-1])

    @settings(max_examples=80, deadline=None)
    @given(st.integers(1, 12), st.integers(0, 2**35 - 1))
    def test_round_trip_bit_exact(self, n, mask):
        pairs = list(combinations(range(n), 2))
        g = Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        s = serialize(g, "graph6")
        assert parse(GraphDocument("graph6", s)) == g
        # serialize again: byte-identical
        assert serialize(parse(GraphDocument("graph6", s)), "graph6") == s

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 10), st.integers(0, 2**30 - 1))
    def test_edge_list_round_trip(self, n, mask):
        pairs = list(combinations(range(n), 2))
        g = Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        assert parse(GraphDocument("edge-list", serialize(g, "edge-list"))) == g

    def test_empty_payload(self):
        with pytest.raises(GraphInputError):
            parse(GraphDocument("graph6", "  "))

    def test_unknown_format(self):
        with pytest.raises(GraphInputError):
            GraphDocument("dot", "x")

    def test_round_trip_over_generated_corpora(self):
        from tperfect.corpus import generate_corpus

        corpus = generate_corpus("named", 1, seed=0)
        corpus += generate_corpus("random-subcubic", 40, seed=6, n_min=4, n_max=14)
        corpus += generate_corpus("random-clawfree-via-linegraph", 40, seed=6)
        for g in corpus:
            for fmt in ("graph6", "edge-list"):
                assert parse(GraphDocument(fmt, serialize(g, fmt))) == g
