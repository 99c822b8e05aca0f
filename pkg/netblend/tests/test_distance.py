"""Tests for DDQC, KS, summaries and NetDistance."""
import pytest

from netblend.models.graph import Graph
from netblend.models.summary import MetricId, MetricWeights, PropertyKind
from netblend.services.distance import (
    ddqc_distance,
    ddqc_features,
    ks_statistic,
    metric_error,
    net_distance,
    summarize,
    summary_error,
)
from netblend.utils.errors import DegenerateGraphError, GraphArgumentError, UnknownMetricError


def disjoint_copies(g: Graph, times: int) -> Graph:
    result = Graph(g.node_count * times)
    for copy in range(times):
        offset = copy * g.node_count
        for u, v in g.edges():
            result.add_edge(u + offset, v + offset)
    return result


@pytest.mark.unit
class TestDdqcFeatures:
    def test_regular_graph_single_interval(self, k4):
        features = ddqc_features(k4)
        assert max(features) == 1.0
        assert sum(1 for f in features if f > 0) == 1

    def test_sums_to_one(self, two_triangles, star3):
        for g in (two_triangles, star3, Graph.path(7)):
            assert sum(ddqc_features(g)) == pytest.approx(1.0, abs=1e-12)

    def test_star9_binning(self):
        features = ddqc_features(Graph.star(9))
        assert features[2] == pytest.approx(0.9)
        assert features[7] == pytest.approx(0.1)
        assert sum(features) == pytest.approx(1.0)

    def test_empty_graph(self):
        with pytest.raises(DegenerateGraphError):
            ddqc_features(Graph(0))


@pytest.mark.unit
class TestDdqcDistance:
    def test_self_distance(self, star3):
        assert ddqc_distance(star3, star3) == 0.0

    def test_scaled_regular_graph(self):
        small = Graph.ring_lattice(10, 4)
        large = Graph.ring_lattice(100, 4)
        assert ddqc_distance(small, large) == 0.0

    def test_disjoint_duplication(self, star3):
        assert ddqc_distance(star3, disjoint_copies(star3, 3)) == pytest.approx(0.0)

    def test_upper_bound(self):
        # regular graphs put all mass in the top interval; the star puts most low
        assert ddqc_distance(Graph.complete(5), Graph.star(9)) == pytest.approx(1.8)
        assert ddqc_distance(Graph.complete(5), Graph.star(9)) <= 2.0


@pytest.mark.unit
class TestKsStatistic:
    def test_identical(self):
        assert ks_statistic([1, 2, 3], [3, 2, 1]) == 0.0

    def test_disjoint_supports(self):
        assert ks_statistic([1, 2, 3], [4, 5, 6]) == pytest.approx(1.0)

    def test_partial_overlap(self):
        assert ks_statistic([1, 2], [1, 3]) == pytest.approx(0.5)

    def test_triangle_vs_star_degrees(self, triangle, star3):
        assert metric_error(triangle, star3, MetricId.DEGREE, seed=0) == pytest.approx(0.75)

    def test_empty_sample(self):
        with pytest.raises(GraphArgumentError):
            ks_statistic([], [1.0])


@pytest.mark.unit
class TestSummarize:
    def test_triangle(self, triangle):
        summary = summarize(triangle, seed=0)
        assert summary.avg_clustering == pytest.approx(1.0)
        assert summary.transitivity == pytest.approx(1.0)
        assert summary.node_count == 3
        assert summary.edge_count == 3

    def test_regular_graph_flags_assortativity(self, triangle):
        summary = summarize(triangle, seed=0)
        assert summary.assortativity == 0.0
        assert summary.degenerate_metrics == ["assortativity"]

    def test_two_triangles_modularity(self, two_triangles):
        assert summarize(two_triangles, seed=5).modularity == pytest.approx(0.5)

    def test_deterministic(self, two_triangles):
        assert summarize(two_triangles, seed=9) == summarize(two_triangles, seed=9)

    def test_property_samples_sorted(self, star3):
        summary = summarize(star3, seed=0)
        assert set(summary.property_samples) == set(PropertyKind)
        assert summary.property_samples[PropertyKind.DEGREE] == [1.0, 1.0, 1.0, 3.0]

    def test_without_properties(self, star3):
        assert summarize(star3, seed=0, include_properties=False).property_samples == {}

    def test_edgeless_rejected(self):
        with pytest.raises(DegenerateGraphError):
            summarize(Graph(5), seed=0)


@pytest.mark.unit
class TestNetDistance:
    def test_identity_and_symmetry(self, two_triangles, star3):
        a = summarize(two_triangles, seed=1)
        b = summarize(star3, seed=1)
        weights = MetricWeights()
        assert net_distance(a, a, weights) == 0.0
        assert net_distance(a, b, weights) == pytest.approx(net_distance(b, a, weights))
        assert net_distance(a, b, weights) > 0.0

    def test_clustering_only(self, k4_minus_edge):
        base = summarize(k4_minus_edge, seed=0)
        a = base.model_copy(update={"avg_clustering": 0.3})
        b = base.model_copy(update={"avg_clustering": 0.5})
        weights = MetricWeights(
            w_ddqc=0.0, w_clustering=1.0, w_transitivity=0.0, w_assortativity=0.0, w_modularity=0.0
        )
        assert net_distance(a, b, weights) == pytest.approx(0.2)

    def test_weights_require_a_positive_entry(self):
        with pytest.raises(ValueError):
            MetricWeights(
                w_ddqc=0.0, w_clustering=0.0, w_transitivity=0.0, w_assortativity=0.0, w_modularity=0.0
            )

    def test_parse_csv(self):
        weights = MetricWeights.parse_csv("1, 0.5, 0, 2, 1")
        assert weights.as_tuple() == (1.0, 0.5, 0.0, 2.0, 1.0)
        with pytest.raises(ValueError):
            MetricWeights.parse_csv("1,2")


@pytest.mark.unit
class TestMetricError:
    def test_identical_graphs_all_zero(self, two_triangles):
        for metric in MetricId:
            assert metric_error(two_triangles, two_triangles, metric, seed=3) == pytest.approx(0.0)

    def test_triangle_vs_path_transitivity(self, triangle, path3):
        assert metric_error(triangle, path3, "transitivity", seed=0) == pytest.approx(1.0)

    def test_unknown_metric(self, triangle):
        with pytest.raises(UnknownMetricError):
            metric_error(triangle, triangle, "diameter", seed=0)

    def test_summary_error_matches_graph_error(self, two_triangles, star3):
        a = summarize(two_triangles, seed=2)
        b = summarize(star3, seed=2)
        for metric in MetricId:
            assert summary_error(a, b, metric) == pytest.approx(
                metric_error(two_triangles, star3, metric, seed=2)
            )
