import numpy as np
import pytest

from ccnet import (
    GraphError,
    WeightedDigraph,
    algebraic_connectivity,
    assortativity,
    build_graph,
    clustering,
    coverage,
    diameter,
    edge_density,
    graph_asymmetry,
    hop_distance_matrix,
    largest_scc,
    threshold_graph,
)
from helpers import largest_scc_oracle, make_tradelike, random_digraph, random_strongly_connected


def cycle_graph(labels):
    edges = [(labels[i], labels[(i + 1) % len(labels)], 1.0) for i in range(len(labels))]
    return build_graph(edges)


def complete_digraph(n):
    return build_graph([(f"v{i}", f"v{j}", 1.0) for i in range(n) for j in range(n) if i != j])


class TestBuildGraph:
    def test_single_edge(self):
        g = build_graph([("a", "b", 1.0)])
        assert g.n == 2 and g.n_edges == 1

    def test_reciprocal_edges(self):
        g = build_graph([("a", "b", 1.0), ("b", "a", 2.0)])
        assert g.n == 2 and g.n_edges == 2
        assert g.weights[0, 1] == 1.0 and g.weights[1, 0] == 2.0

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError):
            build_graph([("a", "a", 1.0)])

    def test_non_positive_weight_rejected(self):
        with pytest.raises(GraphError):
            build_graph([("a", "b", 0.0)])
        with pytest.raises(GraphError):
            build_graph([("a", "b", -1.0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError):
            build_graph([("a", "b", 1.0), ("a", "b", 2.0)])

    def test_first_appearance_order(self):
        g = build_graph([("c", "a", 1.0), ("a", "b", 1.0)])
        assert g.labels == ("c", "a", "b")

    def test_empty_label_rejected(self):
        with pytest.raises(GraphError):
            build_graph([("", "b", 1.0)])


class TestThreshold:
    def test_drops_below(self):
        g = build_graph([("a", "b", 5.0), ("b", "c", 20.0)])
        out = threshold_graph(g, 10.0)
        assert out.n_edges == 1 and out.weights[1, 2] == 20.0
        assert out.labels == g.labels  # isolated nodes retained

    def test_min_weight_keeps_everything(self):
        g = build_graph([("a", "b", 5.0), ("b", "c", 20.0)])
        out = threshold_graph(g, 5.0)
        assert np.array_equal(out.weights, g.weights)

    def test_boundary_inclusive(self):
        g = build_graph([("a", "b", 9.999), ("b", "c", 10.0)])
        out = threshold_graph(g, 10.0)
        assert out.n_edges == 1 and out.weights[1, 2] == 10.0

    def test_idempotent(self):
        for seed in range(5):
            g = random_digraph(12, seed)
            once = threshold_graph(g, 4.0)
            twice = threshold_graph(once, 4.0)
            assert np.array_equal(once.weights, twice.weights)

    def test_empty_result_is_legal(self):
        g = build_graph([("a", "b", 1.0)])
        assert threshold_graph(g, 2.0).n_edges == 0

    def test_non_positive_threshold_rejected(self):
        g = build_graph([("a", "b", 1.0)])
        with pytest.raises(GraphError):
            threshold_graph(g, 0.0)


class TestLargestScc:
    def test_cycle_is_returned_whole(self):
        g = cycle_graph(["a", "b", "c"])
        out = largest_scc(g)
        assert out.labels == g.labels
        assert np.array_equal(out.weights, g.weights)

    def test_chain_has_no_component(self):
        g = build_graph([("a", "b", 1.0), ("b", "c", 1.0)])
        with pytest.raises(GraphError):
            largest_scc(g)

    def test_bridge_between_cycles(self):
        g = build_graph([
            ("a", "b", 1.0), ("b", "c", 1.0), ("c", "a", 1.0),
            ("d", "e", 1.0), ("e", "d", 1.0),
            ("c", "d", 1.0),
        ])
        out = largest_scc(g)
        assert set(out.labels) == {"a", "b", "c"}
        assert set(out.labels) == set(largest_scc_oracle(g))

    def test_matches_reachability_oracle(self):
        checked = 0
        for seed in range(60):
            g = random_digraph(int(5 + (seed * 7) % 46), seed, p=0.08)
            expected = largest_scc_oracle(g)
            if len(expected) < 2:
                with pytest.raises(GraphError):
                    largest_scc(g)
                continue
            assert largest_scc(g).labels == expected
            checked += 1
        assert checked > 20

    def test_tie_break_smallest_index(self):
        g = build_graph([
            ("x", "y", 1.0), ("y", "x", 1.0),
            ("p", "q", 1.0), ("q", "p", 1.0),
        ])
        assert largest_scc(g).labels == ("x", "y")


class TestAsymmetry:
    def test_symmetric_matrix_is_zero(self):
        g = build_graph([("a", "b", 3.0), ("b", "a", 3.0)])
        assert graph_asymmetry(g) == 0.0

    def test_single_edge(self):
        g = build_graph([("a", "b", 1.0)])
        assert graph_asymmetry(g) == pytest.approx(np.sqrt(2) / 2, abs=1e-12)

    def test_two_one(self):
        g = build_graph([("a", "b", 2.0), ("b", "a", 1.0)])
        assert graph_asymmetry(g) == pytest.approx(np.sqrt(2) / (2 * np.sqrt(5)), abs=1e-12)

    def test_bounds_and_unreciprocated_value(self):
        for seed in range(8):
            g = random_digraph(10, seed)
            if g.n_edges == 0:
                continue
            assert 0.0 <= graph_asymmetry(g) <= 1.0
        # no reciprocated edges: exactly sqrt(2)/2
        g = build_graph([("a", "b", 3.0), ("b", "c", 1.0), ("c", "a", 7.0)])
        assert graph_asymmetry(g) == pytest.approx(np.sqrt(2) / 2, abs=1e-12)

    def test_empty_edge_set_rejected(self):
        g = threshold_graph(build_graph([("a", "b", 1.0)]), 5.0)
        with pytest.raises(GraphError):
            graph_asymmetry(g)


class TestEdgeDensity:
    def test_complete(self):
        assert edge_density(complete_digraph(3)) == 1.0

    def test_partial(self):
        g = build_graph([("a", "b", 1.0), ("b", "c", 1.0)])
        assert edge_density(g) == pytest.approx(1 / 3)

    def test_trade_web_scale(self):
        # 181 nodes, 2078 edges
        rng = np.random.default_rng(0)
        n = 181
        cells = [(i, j) for i in range(n) for j in range(n) if i != j]
        picks = rng.choice(len(cells), size=2078, replace=False)
        w = np.zeros((n, n))
        for k in picks:
            w[cells[k]] = 1.0
        g = WeightedDigraph(tuple(f"c{i}" for i in range(n)), w)
        assert edge_density(g) == pytest.approx(2078 / (181 * 180))
        assert edge_density(g) == pytest.approx(0.0638, abs=5e-4)


class TestDiameterAndDistances:
    def test_complete_is_one(self):
        for n in range(2, 21):
            assert diameter(complete_digraph(n)) == 1
            assert edge_density(complete_digraph(n)) == 1.0

    def test_directed_four_cycle(self):
        assert diameter(cycle_graph(["a", "b", "c", "d"])) == 3

    def test_not_strongly_connected_rejected(self):
        with pytest.raises(GraphError):
            diameter(build_graph([("a", "b", 1.0), ("b", "c", 1.0)]))

    def test_diameter_at_least_mean_aspl(self):
        for seed in range(6):
            g = random_strongly_connected(15, seed)
            dist = hop_distance_matrix(g).astype(float)
            mean = dist[~np.eye(g.n, dtype=bool)].mean()
            assert diameter(g) >= int(np.ceil(mean))


class TestClustering:
    def test_triangle(self):
        vals, mean = clustering(cycle_graph(["a", "b", "c"]))
        assert np.allclose(vals, 1.0) and mean == 1.0

    def test_star_is_zero(self):
        g = build_graph([("hub", leaf, 1.0) for leaf in ("l1", "l2", "l3")])
        vals, mean = clustering(g)
        assert np.allclose(vals, 0.0) and mean == 0.0

    def test_triangle_with_pendant(self):
        g = build_graph([
            ("a", "b", 1.0), ("b", "c", 1.0), ("c", "a", 1.0),
            ("a", "p", 1.0),
        ])
        vals, mean = clustering(g)
        by = dict(zip(g.labels, vals))
        assert by["p"] == 0.0
        assert by["a"] == pytest.approx(1 / 3)
        assert by["b"] == 1.0 and by["c"] == 1.0
        assert mean == pytest.approx((1 / 3 + 1 + 1 + 0) / 4)


class TestAlgebraicConnectivity:
    def test_k2(self):
        g = build_graph([("a", "b", 1.0), ("b", "a", 1.0)])
        assert algebraic_connectivity(g) == pytest.approx(2.0, abs=1e-10)

    def test_k3(self):
        assert algebraic_connectivity(complete_digraph(3)) == pytest.approx(1.5, abs=1e-10)

    def test_positive_on_connected(self):
        for seed in range(5):
            g = random_strongly_connected(12, seed)
            assert algebraic_connectivity(g) > 0.0

    def test_matches_direct_construction(self):
        # entrywise-constructed normalized Laplacian as the oracle
        for seed in range(5):
            g = random_strongly_connected(int(5 + 3 * seed), seed)
            sym = (g.weights + g.weights.T) / 2.0
            s = sym.sum(axis=1)
            n = g.n
            lap = np.zeros((n, n))
            for i in range(n):
                for j in range(n):
                    d = (s[i] if i == j else 0.0) - sym[i, j]
                    lap[i, j] = d / np.sqrt(s[i] * s[j])
            expected = np.sort(np.linalg.eigvalsh(lap))[1]
            assert algebraic_connectivity(g) == pytest.approx(expected, abs=1e-8)

    def test_disconnected_rejected(self):
        g = build_graph([("a", "b", 1.0), ("b", "a", 1.0),
                         ("c", "d", 1.0), ("d", "c", 1.0)])
        with pytest.raises(GraphError):
            algebraic_connectivity(g)


class TestAssortativity:
    def test_equal_strength_cycle_is_degenerate(self):
        g = build_graph([("a", "b", 1.0), ("b", "a", 1.0)])
        assert assortativity(g) is None

    def test_star_is_disassortative(self):
        edges = []
        for leaf in ("l1", "l2", "l3"):
            edges.append(("hub", leaf, 1.0))
            edges.append((leaf, "hub", 1.0))
        assert assortativity(build_graph(edges)) == pytest.approx(-1.0, abs=1e-12)

    def test_disjoint_tiers_are_assortative(self):
        g = build_graph([
            ("a", "b", 10.0), ("b", "a", 10.0),
            ("c", "d", 1.0), ("d", "c", 1.0),
        ])
        assert assortativity(g) == pytest.approx(1.0, abs=1e-12)

    def test_single_edge_rejected(self):
        with pytest.raises(GraphError):
            assortativity(build_graph([("a", "b", 1.0)]))


class TestCoverage:
    def test_identity(self):
        g = make_tradelike(10, 0)
        assert coverage(g, g) == pytest.approx(1.0)

    def test_partial(self):
        full = build_graph([("a", "b", 1.0), ("b", "c", 3.0)])
        reduced = threshold_graph(full, 2.0)
        assert coverage(full, reduced) == pytest.approx(0.75)

    def test_empty_reduced(self):
        full = build_graph([("a", "b", 1.0)])
        assert coverage(full, threshold_graph(full, 9.0)) == 0.0

    def test_subset_violation_rejected(self):
        full = build_graph([("a", "b", 1.0)])
        other = build_graph([("a", "b", 2.0)])
        with pytest.raises(GraphError):
            coverage(full, other)

    def test_lsctg_pipeline_coverage(self):
        g = make_tradelike(15, 1)
        reduced = largest_scc(threshold_graph(g, float(np.median(g.weights[g.weights > 0]))))
        cov = coverage(g, reduced)
        assert 0.0 < cov <= 1.0


class TestTranspose:
    def test_transpose_reverses_edges(self):
        g = build_graph([("a", "b", 2.0), ("b", "c", 5.0)])
        gt = g.transpose()
        assert gt.weights[1, 0] == 2.0 and gt.weights[2, 1] == 5.0
        assert np.array_equal(gt.transpose().weights, g.weights)
