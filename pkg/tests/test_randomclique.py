"""Random clique complexes: sampling determinism, links, pruning, reports."""

import itertools

import pytest

from flagsphere import (
    Graph,
    RandomCliqueParams,
    TruncatedCliqueComplex,
    forest_link_fraction,
    prune_bad_links,
    run_experiment,
    sample_clique_complex,
)
from flagsphere.errors import InvalidAlpha
from flagsphere.randomclique import independence_bound_report


class TestParams:
    def test_valid_band_for_d3(self):
        RandomCliqueParams(n=10, alpha=0.55, d=3, seed=1).validate()
        RandomCliqueParams(n=10, alpha=0.99, d=3, seed=1).validate()

    @pytest.mark.parametrize("alpha", (0.5, 1.0, 0.3, 1.7))
    def test_invalid_alpha_d3(self, alpha):
        with pytest.raises(InvalidAlpha):
            RandomCliqueParams(n=10, alpha=alpha, d=3, seed=1).validate()

    def test_d4_band(self):
        RandomCliqueParams(n=10, alpha=0.4, d=4, seed=1).validate()
        with pytest.raises(InvalidAlpha):
            RandomCliqueParams(n=10, alpha=0.6, d=4, seed=1).validate()

    def test_validity_waived_in_test_mode(self):
        params = RandomCliqueParams(n=12, alpha=9.0, d=3, seed=1)
        g, cc = sample_clique_complex(params, check=False)
        assert g.edge_count == 0
        assert forest_link_fraction(cc) == 1.0


class TestSampling:
    @pytest.mark.parametrize("n,seed", [(10, 1), (13, 2), (15, 3)])
    def test_faces_match_bruteforce_cliques(self, n, seed):
        params = RandomCliqueParams(n=n, alpha=0.55, d=3, seed=seed)
        g, cc = sample_clique_complex(params)
        for size in range(1, 5):
            brute = {
                frozenset(c)
                for c in itertools.combinations(range(n), size)
                if all(g.has_edge(a, b) for a, b in itertools.combinations(c, 2))
            }
            assert cc.faces(size) == brute

    def test_deterministic(self):
        params = RandomCliqueParams(n=40, alpha=0.55, d=3, seed=9)
        g1, _ = sample_clique_complex(params)
        g2, _ = sample_clique_complex(params)
        assert g1 == g2

    def test_truncation(self):
        cc = TruncatedCliqueComplex(Graph.complete(6), 3)
        assert max(cc.faces_by_size) == 4  # cliques capped at d+1 vertices


class TestForestLinks:
    def test_edgeless_all_forests(self):
        assert forest_link_fraction(TruncatedCliqueComplex(Graph.edgeless(5), 3)) == 1.0

    def test_k5_truncated_all_cyclic(self):
        cc = TruncatedCliqueComplex(Graph.complete(5), 3)
        assert forest_link_fraction(cc) == 0.0

    def test_d4_uses_edge_links(self):
        cc = TruncatedCliqueComplex(Graph.complete(6), 4)
        assert forest_link_fraction(cc, 4) == 0.0  # edge links contain K4


class TestPrune:
    def test_forest_complex_unchanged(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4)])
        cc = TruncatedCliqueComplex(g, 3)
        pruned, removed = prune_bad_links(cc)
        assert removed == 0 and pruned.graph.n == 6

    def test_k5_removed_entirely(self):
        pruned, removed = prune_bad_links(TruncatedCliqueComplex(Graph.complete(5), 3))
        assert removed == 5 and pruned.graph.n == 0

    @pytest.mark.parametrize("seed", (1, 2))
    def test_sampled_postcondition(self, seed):
        params = RandomCliqueParams(n=500, alpha=0.55, d=3, seed=seed)
        _, cc = sample_clique_complex(params)
        pruned, removed = prune_bad_links(cc)
        assert forest_link_fraction(pruned) == 1.0
        assert removed >= 0


class TestIndependenceReport:
    def test_edgeless_degenerate(self):
        params = RandomCliqueParams(n=5, alpha=0.55, d=3, seed=1)
        rep = independence_bound_report(Graph.edgeless(5), params)
        assert rep["degenerate"]

    def test_complete_graph(self):
        params = RandomCliqueParams(n=30, alpha=0.55, d=3, seed=1)
        rep = independence_bound_report(Graph.complete(30), params)
        assert rep["exact_alpha"] == 1

    def test_pinned_n300_regression(self):
        # exact search is out of reach at this size (solver budget blows);
        # the greedy ratio is the pinned regression value
        params = RandomCliqueParams(n=300, alpha=0.55, d=3, seed=1)
        g, _ = sample_clique_complex(params)
        assert g.edge_count == 1944
        rep = independence_bound_report(g, params)
        assert rep["exact_alpha"] is None
        assert rep["greedy_alpha"] == 62
        assert abs(rep["ratio"] - 0.4718587848) < 1e-9


class TestExperiment:
    def test_report_fields_and_determinism(self):
        params = RandomCliqueParams(n=80, alpha=0.55, d=3, seed=2)
        rep1 = run_experiment(params)
        rep2 = run_experiment(params)
        assert rep1 == rep2
        for key in (
            "forest_fraction",
            "removed",
            "greedy_alpha",
            "exact_alpha",
            "reference_curve",
        ):
            assert key in rep1
        assert 0.0 <= rep1["forest_fraction"] <= 1.0
