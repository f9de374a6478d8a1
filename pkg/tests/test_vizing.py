"""Edge colouring within max_degree + 1 colours."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avdtotal import (EdgeColoring, Graph, complete_bipartite_graph,
                      complete_graph, cycle_graph, edge_properness_violations,
                      path_graph, random_gnp, star_graph, vizing_color)

from helpers import connected_graphs


def assert_valid(g, ec):
    assert set(ec.colors) == set(g.edges)
    assert all(1 <= c <= g.max_degree + 1 for c in ec.colors.values())
    for v in range(g.n):
        cols = [ec.colors[e] for e in g.incident_edges(v)]
        assert len(cols) == len(set(cols)), f"clash at vertex {v}"


class TestVizing:
    def test_empty_graph(self):
        g = Graph.build(3, [])
        ec = vizing_color(g)
        assert ec.colors == {} and ec.k == 1

    def test_single_edge(self):
        g = path_graph(2)
        ec = vizing_color(g)
        assert ec.colors == {(0, 1): 1}

    def test_path(self):
        assert_valid(path_graph(6), vizing_color(path_graph(6)))

    def test_even_cycle_two_colors(self):
        g = cycle_graph(6)
        ec = vizing_color(g)
        assert_valid(g, ec)
        assert len(ec.used_colors()) <= 3

    def test_odd_cycle_needs_three(self):
        g = cycle_graph(5)
        ec = vizing_color(g)
        assert_valid(g, ec)
        assert len(ec.used_colors()) == 3

    def test_star_uses_exactly_degree(self):
        g = star_graph(7)
        ec = vizing_color(g)
        assert_valid(g, ec)
        assert len(ec.used_colors()) == 7

    def test_complete_graphs(self):
        for n in range(2, 9):
            g = complete_graph(n)
            assert_valid(g, vizing_color(g))

    def test_bipartite(self):
        g = complete_bipartite_graph(3, 4)
        assert_valid(g, vizing_color(g))

    def test_all_connected_up_to_five(self):
        for n in range(2, 6):
            for g in connected_graphs(n):
                assert_valid(g, vizing_color(g))

    @given(st.integers(2, 16), st.floats(0.1, 0.9), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_random_graphs(self, n, p, seed):
        g = random_gnp(n, p, seed)
        assert_valid(g, vizing_color(g))


class TestEdgePropernessViolations:
    def test_clean(self):
        g = path_graph(3)
        ec = EdgeColoring({(0, 1): 1, (1, 2): 2}, 2)
        assert edge_properness_violations(g, ec) == []

    def test_clash_detected(self):
        g = path_graph(3)
        ec = EdgeColoring({(0, 1): 1, (1, 2): 1}, 1)
        vs = edge_properness_violations(g, ec)
        assert vs == [((0, 1), (1, 2))]

    def test_coverage_mismatch_raises(self):
        g = path_graph(3)
        ec = EdgeColoring({(0, 1): 1}, 1)
        with pytest.raises(ValueError):
            edge_properness_violations(g, ec)
