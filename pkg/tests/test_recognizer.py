import random

import pytest

from tperfect.core import (
    Graph,
    Separation,
    claw,
    complete_graph,
    cycle_graph,
    make_named,
    squared_cycle,
    wheel_5,
)
from tperfect.corpus import generate_corpus
from tperfect.errors import GraphInputError, NotClawFreeError
from tperfect.linegraph import line_graph
from tperfect.oracle import is_t_perfect_bruteforce
from tperfect.recognizer import build_reduced_sides, find_claw, is_t_perfect


class TestFindClaw:
    def test_star(self):
        w = find_claw(claw())
        assert w.centre == 0 and w.leaves == (1, 2, 3)

    def test_squared_cycle_clean(self):
        assert find_claw(squared_cycle(7)) is None

    def test_line_graphs_clean(self):
        rnd = random.Random(44)
        from itertools import combinations

        for _ in range(60):
            n = rnd.randint(2, 9)
            pairs = list(combinations(range(n), 2))
            h = Graph(n, [e for e in pairs if rnd.random() < 0.5])
            if h.m == 0:
                continue
            g, _ = line_graph(h)
            assert find_claw(g) is None

    def test_wheel_five_clean(self):
        assert find_claw(wheel_5()) is None


class TestGoldenVerdicts:
    @pytest.mark.parametrize(
        "name,expect",
        [
            ("K4", False),
            ("W5", False),
            ("C2(7)", False),
            ("C2(10)", False),
            ("C2(6)-minus-edge-v1v6", True),
            ("C2(7)-minus-vertex", True),
            ("C2(10)-minus-vertex", True),
        ],
    )
    def test_named(self, name, expect):
        assert is_t_perfect(make_named(name)).t_perfect is expect

    def test_even_cycle(self):
        assert is_t_perfect(cycle_graph(4)).t_perfect

    def test_octahedron_via_line_graph(self):
        g, _ = line_graph(complete_graph(4))
        d = is_t_perfect(g)
        assert d.t_perfect
        assert d.certificate[-1].rule.startswith("line-graph")

    def test_claw_raises_with_witness(self):
        with pytest.raises(NotClawFreeError) as exc:
            is_t_perfect(claw())
        assert exc.value.centre == 0

    def test_disconnected_conjunction(self):
        two = Graph(9, list(cycle_graph(5).edges) + [(u + 5, v + 5) for u, v in complete_graph(4).edges])
        assert not is_t_perfect(two).t_perfect
        both_fine = Graph(8, list(cycle_graph(4).edges) + [(u + 4, v + 4) for u, v in cycle_graph(4).edges])
        assert is_t_perfect(both_fine).t_perfect


class TestCertificates:
    def test_terminal_rule_last(self):
        d = is_t_perfect(make_named("W5"))
        assert d.certificate[-1].rule == "degree-screen"

    def test_certificate_names_original_vertices(self):
        g = make_named("C2(7)")
        d = is_t_perfect(g)
        scope = d.certificate[-1].vertices
        assert sorted(x for grp in scope for x in grp) == list(range(7))

    def test_determinism(self):
        g = generate_corpus("random-clawfree-via-linegraph", 1, seed=10, n_min=8, n_max=12)[0]
        a = is_t_perfect(g)
        b = is_t_perfect(g)
        assert a.t_perfect == b.t_perfect
        assert [e.to_json() for e in a.certificate] == [e.to_json() for e in b.certificate]

    def test_stats_counters(self):
        d = is_t_perfect(make_named("C2(7)-minus-vertex"))
        assert d.stats["decide_calls"] >= 1
        assert d.stats["rule_applications"] >= d.stats["decide_calls"]


class TestReducedSides:
    def test_shared_edge_lands_in_unchanged_case(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        sep = Separation(frozenset({0, 1, 2}), frozenset({0, 1, 3}))
        # the separator edge is present: every induced path is the edge,
        # odd on both sides
        g1t, g2t, case = build_reduced_sides(g, sep, (True, False, True, False))
        assert case == "separation-even-neither-side"
        assert g1t.n == 3 and g2t.n == 3

    def test_even_both_sides_unchanged(self):
        g = cycle_graph(6)
        sep = Separation(frozenset({0, 1, 2, 3}), frozenset({3, 4, 5, 0}))
        g1t, g2t, case = build_reduced_sides(g, sep, (False, True, False, True))
        assert case == "separation-odd-neither-side"
        assert (g1t.n, g2t.n) == (4, 4)

    def test_mixed_case_raises(self):
        g = cycle_graph(6)
        sep = Separation(frozenset({0, 1, 2, 3}), frozenset({3, 4, 5, 0}))
        with pytest.raises(GraphInputError):
            build_reduced_sides(g, sep, (True, True, True, True))

    def test_odd_one_side_children_are_t_perfect(self):
        # splitting a five-cycle at a two-cut: one side odd-only, the
        # other even-only; both reduced sides check out via the oracle
        g = cycle_graph(5)
        sep = Separation(frozenset({0, 1, 2}), frozenset({2, 3, 4, 0}))
        # side1 = path 0-1-2 (even only), side2 = path 2-3-4-0 (odd only)
        g1t, g2t, case = build_reduced_sides(g, sep, (False, True, True, False))
        assert case in ("separation-odd-one-side", "separation-even-one-side")
        for child in (g1t, g2t):
            assert is_t_perfect_bruteforce(child)


class TestOracleAgreement:
    def test_exhaustive_small_clawfree(self):
        from tperfect.corpus import enumerate_connected_graphs, is_clawfree

        graphs = enumerate_connected_graphs(6, is_clawfree)
        for g in graphs:
            assert is_t_perfect(g).t_perfect == is_t_perfect_bruteforce(g), g.edges

    def test_random_corpus(self):
        corpus = generate_corpus("random-clawfree-via-linegraph", 150, seed=77, n_min=4, n_max=12)
        for g in corpus:
            assert is_t_perfect(g).t_perfect == is_t_perfect_bruteforce(g), g.edges

    @pytest.mark.slow
    def test_master_property_exhaustive_to_nine(self):
        # verdicts match the forbidden-t-minor closure on every connected
        # claw-free graph with at most nine vertices
        from tperfect.corpus import enumerate_connected_graphs, is_clawfree

        graphs = enumerate_connected_graphs(9, is_clawfree)
        assert len(graphs) == 5639
        for g in graphs:
            assert is_t_perfect(g).t_perfect == is_t_perfect_bruteforce(g), g.edges
