"""Size-independent dissimilarity between graphs.

The weighted-L1 ``net_distance`` over graph summaries is the GA fitness. The
degree distribution enters it through the eight DDQC features; the KS
statistic over node-property distributions is used by evaluation reports.
"""
from typing import Dict, List, Sequence

import numpy as np
from scipy import stats

from netblend.models.graph import Graph
from netblend.models.summary import (
    GraphSummary,
    MetricId,
    MetricWeights,
    PropertyKind,
)
from netblend.services import metrics
from netblend.utils.errors import DegenerateGraphError, GraphArgumentError, UnknownMetricError
from netblend.utils.logging import get_logger

logger = get_logger(__name__)

DDQC_FEATURE_COUNT = 8


def ddqc_boundaries(degrees: np.ndarray) -> np.ndarray:
    """The nine interval boundaries of the DDQC quantification.

    [d_min, d_max] is cut at mean - std, mean and mean + std (clipped to the
    range) and each of the four regions is halved.
    """
    d_min, d_max = float(degrees.min()), float(degrees.max())
    mu = float(degrees.mean())
    sigma = float(degrees.std())
    regions = np.clip([d_min, mu - sigma, mu, mu + sigma, d_max], d_min, d_max)
    regions = np.maximum.accumulate(regions)
    bounds = np.empty(2 * len(regions) - 1)
    bounds[0::2] = regions
    bounds[1::2] = (regions[:-1] + regions[1:]) / 2.0
    return bounds


def ddqc_features(g: Graph) -> List[float]:
    """Probability mass of node degrees in each of the eight DDQC intervals.

    Intervals are left-closed, the last one is closed on both sides. A zero
    standard deviation puts all mass in the interval that contains the mean.
    """
    if g.node_count == 0:
        raise DegenerateGraphError("DDQC features need at least one node")
    degrees = g.degrees().astype(float)
    bounds = ddqc_boundaries(degrees)
    index = np.searchsorted(bounds[1:-1], degrees, side="right")
    counts = np.bincount(index, minlength=DDQC_FEATURE_COUNT)
    return [float(c) / g.node_count for c in counts]


def ddqc_distance(g1: Graph, g2: Graph) -> float:
    """L1 distance between the DDQC vectors of two graphs, in [0, 2]."""
    return float(np.abs(np.subtract(ddqc_features(g1), ddqc_features(g2))).sum())


def ks_statistic(a: Sequence[float], b: Sequence[float]) -> float:
    """Two-sample Kolmogorov-Smirnov statistic (sup gap of the ECDFs)."""
    if len(a) == 0 or len(b) == 0:
        raise GraphArgumentError("KS statistic requires two non-empty samples")
    return float(stats.ks_2samp(a, b, method="asymp").statistic)


def summarize(g: Graph, seed: int, include_properties: bool = True) -> GraphSummary:
    """Compute the comparison reference for ``g``.

    ``include_properties=False`` skips the six node-property distributions,
    which the fitness function never reads.
    """
    if g.node_count < 2 or g.edge_count < 1:
        raise DegenerateGraphError(
            "summaries need at least 2 nodes and 1 edge",
            {"nodes": g.node_count, "edges": g.edge_count},
        )

    degenerate: List[str] = []
    r, r_degenerate = metrics.assortativity_checked(g)
    if r_degenerate:
        degenerate.append(MetricId.ASSORTATIVITY.value)
    _, q = metrics.best_partition_modularity(g, seed)

    samples: Dict[PropertyKind, List[float]] = {}
    if include_properties:
        for kind in PropertyKind:
            samples[kind] = sorted(metrics.property_values(g, kind))

    return GraphSummary(
        avg_clustering=metrics.average_clustering(g),
        transitivity=metrics.transitivity(g),
        assortativity=r,
        modularity=q,
        ddqc_features=ddqc_features(g),
        node_count=g.node_count,
        edge_count=g.edge_count,
        property_samples=samples,
        degenerate_metrics=degenerate,
    )


def net_distance(a: GraphSummary, b: GraphSummary, w: MetricWeights) -> float:
    """Weighted Manhattan distance between two summaries."""
    ddqc_term = float(np.abs(np.subtract(a.ddqc_features, b.ddqc_features)).sum())
    return (
        w.w_ddqc * ddqc_term
        + w.w_clustering * abs(a.avg_clustering - b.avg_clustering)
        + w.w_transitivity * abs(a.transitivity - b.transitivity)
        + w.w_assortativity * abs(a.assortativity - b.assortativity)
        + w.w_modularity * abs(a.modularity - b.modularity)
    )


def _parse_metric(metric: "MetricId | str") -> MetricId:
    try:
        return MetricId(metric)
    except ValueError:
        valid = ", ".join(m.value for m in MetricId)
        raise UnknownMetricError(f"unknown metric {metric!r}; expected one of: {valid}") from None


def _global_value(g: Graph, metric: MetricId, seed: int) -> float:
    if metric is MetricId.AVG_CLUSTERING:
        return metrics.average_clustering(g)
    if metric is MetricId.TRANSITIVITY:
        return metrics.transitivity(g)
    if metric is MetricId.ASSORTATIVITY:
        return metrics.assortativity(g)
    return metrics.best_partition_modularity(g, seed)[1]


def metric_error(target: Graph, synth: Graph, metric: "MetricId | str", seed: int) -> float:
    """error_m between a target and a synthesized graph.

    Global metrics give the absolute difference, ``ddqc`` the DDQC distance
    and node properties the KS statistic of their value distributions.
    """
    metric = _parse_metric(metric)
    if metric is MetricId.DDQC:
        return ddqc_distance(target, synth)
    kind = metric.property_kind
    if kind is not None:
        return ks_statistic(
            metrics.property_values(target, kind), metrics.property_values(synth, kind)
        )
    return abs(_global_value(target, metric, seed) - _global_value(synth, metric, seed))


def summary_error(target: GraphSummary, synth: GraphSummary, metric: "MetricId | str") -> float:
    """error_m computed from two summaries that include property samples."""
    metric = _parse_metric(metric)
    if metric is MetricId.DDQC:
        return float(np.abs(np.subtract(target.ddqc_features, synth.ddqc_features)).sum())
    kind = metric.property_kind
    if kind is not None:
        if kind not in target.property_samples or kind not in synth.property_samples:
            raise GraphArgumentError(f"summary lacks {kind.value} samples")
        return ks_statistic(target.property_samples[kind], synth.property_samples[kind])
    return abs(target.metric(metric) - synth.metric(metric))
