"""Exhaustive solvers cross-checked against brute enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avdtotal import (CapacityError, Graph, Graph6Error, check_conjecture,
                      chi_at_exact, chi_prime_exact, chi_total_exact,
                      chi_vertex_exact, complete_bipartite_graph,
                      complete_graph, cycle_graph, find_edge_coloring,
                      find_total_coloring, path_graph, random_gnp, star_graph,
                      verdict, write_graph6)

from helpers import connected_graphs, enumerate_total_colorings, naive_is_avd, naive_is_proper


def brute_chi_total(g):
    t = g.n + len(g.edges)
    if t == 0:
        return 0
    for k in range(1, t + 1):
        for phi in enumerate_total_colorings(g, k):
            return k  # enumeration only yields proper colourings
    raise AssertionError


def brute_chi_at(g):
    t = g.n + len(g.edges)
    if t == 0:
        return 0
    for k in range(1, t + 1):
        for phi in enumerate_total_colorings(g, k):
            if naive_is_avd(g, phi):
                return k
    raise AssertionError


class TestEdgeColoring:
    def test_infeasible_returns_none(self):
        assert find_edge_coloring(cycle_graph(5), 2) is None

    def test_feasible_is_valid(self):
        g = cycle_graph(5)
        ec = find_edge_coloring(g, 3)
        assert ec is not None
        for v in range(g.n):
            cols = [ec.colors[e] for e in g.incident_edges(v)]
            assert len(cols) == len(set(cols))

    @pytest.mark.parametrize("g,expected", [
        (path_graph(2), 1),
        (path_graph(4), 2),
        (cycle_graph(4), 2),
        (cycle_graph(5), 3),
        (complete_graph(3), 3),
        (complete_graph(4), 3),
        (complete_graph(5), 5),
        (star_graph(5), 5),
        (complete_bipartite_graph(3, 3), 3),
    ])
    def test_chi_prime_known(self, g, expected):
        assert chi_prime_exact(g) == expected

    def test_chi_prime_edgeless(self):
        assert chi_prime_exact(Graph.build(4, [])) == 0

    def test_chi_prime_guard(self):
        with pytest.raises(CapacityError):
            chi_prime_exact(complete_graph(10))  # 45 edges


class TestChiVertex:
    @pytest.mark.parametrize("g,expected", [
        (Graph.build(3, []), 1),
        (path_graph(4), 2),
        (cycle_graph(5), 3),
        (complete_graph(4), 4),
        (complete_bipartite_graph(2, 3), 2),
    ])
    def test_known(self, g, expected):
        assert chi_vertex_exact(g) == expected


class TestChiTotal:
    @pytest.mark.parametrize("g,expected", [
        (path_graph(2), 3),   # both endpoints and the edge mutually clash
        (path_graph(3), 3),
        (cycle_graph(3), 3),
        (cycle_graph(4), 4),
        (cycle_graph(5), 4),
        (cycle_graph(6), 3),
        (complete_graph(4), 5),
        (star_graph(4), 5),
    ])
    def test_known(self, g, expected):
        assert chi_total_exact(g) == expected

    def test_empty(self):
        assert chi_total_exact(Graph.build(0, [])) == 0
        assert chi_total_exact(Graph.build(3, [])) == 1

    def test_matches_brute_on_connected_n4(self):
        for g in connected_graphs(4):
            assert chi_total_exact(g) == brute_chi_total(g)

    def test_guard(self):
        with pytest.raises(CapacityError):
            chi_total_exact(complete_graph(9))  # 9 + 36 = 45 elements

    def test_returned_coloring_verifies(self):
        g = cycle_graph(5)
        phi = find_total_coloring(g, 4)
        assert phi is not None
        assert naive_is_proper(g, phi)

    def test_infeasible_returns_none(self):
        assert find_total_coloring(cycle_graph(5), 3) is None


class TestChiAt:
    @pytest.mark.parametrize("g,expected", [
        (path_graph(2), 3),
        (path_graph(3), 3),
        (complete_graph(3), 5),
        (cycle_graph(4), 4),
        (cycle_graph(5), 4),
    ])
    def test_known(self, g, expected):
        assert chi_at_exact(g) == expected

    def test_matches_brute_on_connected_n4(self):
        for g in connected_graphs(4):
            assert chi_at_exact(g) == brute_chi_at(g)

    def test_distinguishing_coloring_verifies(self):
        g = complete_graph(3)
        phi = find_total_coloring(g, 5, distinguishing=True)
        assert phi is not None
        assert naive_is_avd(g, phi)
        assert verdict(g, phi) == {"proper": True, "avd": True}

    def test_distinguishing_infeasible(self):
        assert find_total_coloring(complete_graph(3), 4,
                                   distinguishing=True) is None

    def test_at_least_total(self):
        for g in connected_graphs(4):
            assert chi_at_exact(g) >= chi_total_exact(g)

    def test_empty(self):
        assert chi_at_exact(Graph.build(2, [])) == 1


class TestConjectureScan:
    def test_small_corpus(self):
        lines = [write_graph6(complete_graph(3)), "",
                 write_graph6(path_graph(4)),
                 write_graph6(complete_graph(5))]
        report = check_conjecture(lines)
        assert len(report.records) == 3
        assert report.violations == ()
        by6 = {r.graph6: r for r in report.records}
        k5 = by6[write_graph6(complete_graph(5))]
        assert k5.chi_at == 7 and k5.slack == 0
        # triangles and K_5 both meet the bound with equality
        assert [r.graph6 for r in report.tight] == [
            write_graph6(complete_graph(3)), k5.graph6]

    def test_record_fields(self):
        report = check_conjecture([write_graph6(complete_graph(3))])
        rec = report.records[0]
        assert (rec.n, rec.delta, rec.chi_at, rec.slack) == (3, 2, 5, 0)

    def test_parse_error_names_line(self):
        with pytest.raises(Graph6Error, match="line 2"):
            check_conjecture(["C~", "C\x01"])

    def test_capacity_error_names_line(self):
        with pytest.raises(CapacityError, match="line 1"):
            check_conjecture([write_graph6(complete_graph(10))])


@given(st.integers(2, 5), st.integers(0, 99))
@settings(max_examples=25, deadline=None)
def test_exact_agrees_with_brute_on_random(n, seed):
    g = random_gnp(n, 0.5, seed)
    assert chi_total_exact(g) == brute_chi_total(g)
    assert chi_at_exact(g) == brute_chi_at(g)
