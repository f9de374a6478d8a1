"""End-to-end pipeline: recolouring, repair, and the full driver."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avdtotal import (Graph, PipelineParams, TotalColoring, avd_violations,
                      complete_graph, cycle_graph, greedy_total,
                      properness_violations, random_gnp, recolor_union,
                      repair_fallback, run_pipeline, star_graph, verdict)


def two_hub_graph():
    edges = [(0, 1)] + [(0, a) for a in range(2, 8)] + [(1, b) for b in range(8, 14)]
    g = Graph.build(14, edges)
    phi = TotalColoring(
        (1, 2, 4, 2, 2, 2, 2, 2, 3, 1, 1, 1, 1, 1),
        {(0, 1): 3, (0, 2): 2, (0, 3): 4, (0, 4): 5, (0, 5): 6, (0, 6): 7,
         (0, 7): 8, (1, 8): 1, (1, 9): 4, (1, 10): 5, (1, 11): 6, (1, 12): 7,
         (1, 13): 8}, 8)
    return g, phi


def cyclic_k5():
    # every vertex sees all of 1..5, so every adjacent pair clashes
    g = complete_graph(5)
    phi = TotalColoring(
        tuple((2 * v) % 5 + 1 for v in range(5)),
        {(i, j): (i + j) % 5 + 1 for i in range(5) for j in range(i + 1, 5)}, 5)
    return g, phi


class TestRecolorUnion:
    def test_empty_selection_returns_input(self):
        g, phi = two_hub_graph()
        assert recolor_union(g, phi, [], []) is phi

    def test_fresh_palette_sits_above_old_budget(self):
        g, phi = two_hub_graph()
        picked = [(0, 2), (0, 3), (1, 8)]
        out = recolor_union(g, phi, picked[:2], picked[2:])
        for e in picked:
            assert out.edge_colors[e] > phi.k
        for e in g.edges:
            if e not in picked:
                assert out.edge_colors[e] == phi.edge_colors[e]
        assert out.vertex_colors == phi.vertex_colors
        assert properness_violations(g, out) == []

    def test_growth_matches_union_edge_coloring(self):
        g, phi = two_hub_graph()
        out = recolor_union(g, phi, g.edges, [])
        used = {out.edge_colors[e] - phi.k for e in g.edges}
        assert out.k - phi.k == max(used)
        assert min(used) >= 1

    def test_overlapping_selections_merge(self):
        g, phi = two_hub_graph()
        a = recolor_union(g, phi, [(0, 2)], [(0, 2)])
        b = recolor_union(g, phi, [(0, 2)], [])
        assert a == b

    def test_rejects_improper_input(self):
        g, _ = two_hub_graph()
        bad = TotalColoring((1,) * 14, {e: 2 for e in g.edges}, 2)
        with pytest.raises(ValueError):
            recolor_union(g, bad, [(0, 1)], [])

    def test_rejects_foreign_edge(self):
        g, phi = two_hub_graph()
        with pytest.raises(ValueError):
            recolor_union(g, phi, [(2, 3)], [])


class TestRepairFallback:
    def test_fixes_fully_clashing_clique(self):
        g, phi = cyclic_k5()
        assert len(avd_violations(g, phi)) == 10
        out = repair_fallback(g, phi)
        assert out.k == 8  # three rounds, one fresh colour each
        assert avd_violations(g, out) == []
        assert properness_violations(g, out) == []

    def test_clean_input_untouched(self):
        g = star_graph(6)
        phi = greedy_total(g)
        assert repair_fallback(g, phi) is phi

    def test_rejects_improper(self):
        g = cycle_graph(4)
        bad = TotalColoring((1, 1, 1, 1), {e: 2 for e in g.edges}, 2)
        with pytest.raises(ValueError):
            repair_fallback(g, bad)


class TestRunPipeline:
    def test_short_circuit_on_distinguishing_input(self):
        g = star_graph(6)
        phi = greedy_total(g)
        out, report = run_pipeline(g, phi)
        assert out is phi
        assert report.short_circuit is True
        assert report.e1_success is None and report.e2_success is None
        assert report.e1_rounds == 0 and report.e2_rounds == 0
        assert report.fresh_palette_size == 0 and report.fallback_repairs == 0
        assert report.final_k == report.input_k == phi.k
        assert report.verified == {"proper": True, "avd": True}
        assert sorted(report.phase_timings) == ["seed", "verify_input"]

    def test_sparse_cycle_rides_the_fallback_path(self):
        # every vertex of C_5 is high but far below the deletion thresholds,
        # so both randomized stages report failure and the deterministic
        # recolouring still lands a distinguishing result
        g = cycle_graph(5)
        out, report = run_pipeline(g)
        assert report.short_circuit is False
        assert report.e1_success is False and report.e1_rounds == 1
        assert report.e2_success is False and report.e2_rounds == 0
        assert report.e2_infeasible_vertex == 0
        assert report.input_k == 4 and report.final_k == 7
        assert report.fresh_palette_size == 3 and report.fallback_repairs == 0
        assert report.verified == {"proper": True, "avd": True}
        assert avd_violations(g, out) == []

    def test_fully_clashing_clique(self):
        g, phi = cyclic_k5()
        out, report = run_pipeline(g, phi)
        assert report.input_k == 5 and report.final_k == 10
        assert report.fresh_palette_size == 5
        assert report.e2_infeasible_vertex == 0
        assert report.verified == {"proper": True, "avd": True}

    def test_patch_runs_after_bulk_failure(self):
        g, phi = two_hub_graph()
        out, report = run_pipeline(g, phi, PipelineParams(m=5, d=1))
        assert report.e1_success is False
        assert report.e2_success is True
        assert report.final_k == 16 and report.fresh_palette_size == 8
        assert report.verified == {"proper": True, "avd": True}

    def test_both_stages_succeed_with_generous_slack(self):
        g, phi = two_hub_graph()
        params = PipelineParams(m=5, d=1, eps=Fraction(9, 10))
        out, report = run_pipeline(g, phi, params)
        assert report.e1_success is True and report.e2_success is True
        assert report.e2_infeasible_vertex is None
        assert report.final_k - report.input_k == 8

    def test_palette_accounting_is_exact(self):
        cases = [run_pipeline(cycle_graph(5))[1],
                 run_pipeline(*cyclic_k5())[1],
                 run_pipeline(*two_hub_graph())[1]]
        for report in cases:
            assert (report.final_k - report.input_k
                    == report.fresh_palette_size + report.fallback_repairs)

    def test_full_run_times_every_phase(self):
        _, report = run_pipeline(cycle_graph(5))
        assert sorted(report.phase_timings) == [
            "bulk", "low_degree", "patch", "recolor", "repair", "seed",
            "verify_input"]
        assert all(t >= 0.0 for t in report.phase_timings.values())

    def test_json_omits_timings_by_default(self):
        _, report = run_pipeline(cycle_graph(5))
        assert "phase_timings" not in report.to_json()
        assert "phase_timings" in report.to_json(include_timings=True)

    def test_json_fields(self):
        _, report = run_pipeline(cycle_graph(5))
        assert sorted(report.to_json()) == [
            "M", "e1_rounds", "e1_success", "e2_infeasible_vertex",
            "e2_rounds", "e2_success", "fallback_repairs", "final_k",
            "fresh_palette_size", "input_k", "lam", "p", "short_circuit",
            "verified"]

    def test_deterministic_given_seed(self):
        g, phi = two_hub_graph()
        params = PipelineParams(m=5, d=1, eps=Fraction(9, 10), seed=11)
        a = run_pipeline(g, phi, params)
        b = run_pipeline(g, phi, params)
        assert a[0] == b[0]
        assert a[1].to_json() == b[1].to_json()

    def test_rejects_improper_input(self):
        g = cycle_graph(4)
        bad = TotalColoring((1, 1, 1, 1), {e: 2 for e in g.edges}, 2)
        with pytest.raises(ValueError):
            run_pipeline(g, bad)

    def test_rejects_mismatched_shape(self):
        g = cycle_graph(4)
        phi = greedy_total(cycle_graph(5))
        with pytest.raises(ValueError):
            run_pipeline(g, phi)


@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 14))
@settings(max_examples=40, deadline=None)
def test_pipeline_always_lands_distinguishing(seed, n):
    g = random_gnp(n, Fraction(1, 2), seed)
    out, report = run_pipeline(g, params=PipelineParams(seed=seed))
    assert report.verified == {"proper": True, "avd": True}
    assert properness_violations(g, out) == []
    assert avd_violations(g, out) == []
    assert (report.final_k - report.input_k
            == report.fresh_palette_size + report.fallback_repairs)
    assert out.k == report.final_k
