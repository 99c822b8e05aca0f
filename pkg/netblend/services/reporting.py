"""Comparison tables between a target graph and synthesized graphs."""
import json
from typing import Dict, List

import numpy as np
import pandas as pd

from netblend.models.graph import Graph
from netblend.models.mixture import MixtureConfig
from netblend.models.summary import GLOBAL_METRICS, GraphSummary, MetricId
from netblend.services.distance import summarize, summary_error
from netblend.services.metrics import degree_histogram
from netblend.services.processes import synthesize
from netblend.utils.logging import get_logger

logger = get_logger(__name__)

COMPARE_COLUMNS = ["metric", "value_target", "value_synth", "error"]
REPORT_COLUMNS = ["metric", "mean_error", "std_error", "replicates"]
HISTOGRAM_COLUMNS = ["degree", "count_target", "count_synth"]


def _metric_value(summary: GraphSummary, metric: MetricId) -> float:
    if metric in GLOBAL_METRICS:
        return summary.metric(metric)
    # Distributions have no single value; report their mean
    if metric is MetricId.DDQC:
        return float("nan")
    return float(np.mean(summary.property_samples[metric.property_kind]))


def compare_summaries(target: GraphSummary, synth: GraphSummary) -> pd.DataFrame:
    """One row per metric id with both values and error_m."""
    rows = [
        {
            "metric": metric.value,
            "value_target": _metric_value(target, metric),
            "value_synth": _metric_value(synth, metric),
            "error": summary_error(target, synth, metric),
        }
        for metric in MetricId
    ]
    return pd.DataFrame(rows, columns=COMPARE_COLUMNS)


def compare_graphs(target: Graph, synth: Graph, seed: int) -> pd.DataFrame:
    return compare_summaries(summarize(target, seed), summarize(synth, seed))


def histogram_frame(target: Graph, synth: Graph) -> pd.DataFrame:
    """Node counts per degree for both graphs, padded to a common degree range."""
    counts_target = degree_histogram(target)
    counts_synth = degree_histogram(synth)
    size = max(len(counts_target), len(counts_synth))
    counts_target += [0] * (size - len(counts_target))
    counts_synth += [0] * (size - len(counts_synth))
    return pd.DataFrame(
        {"degree": range(size), "count_target": counts_target, "count_synth": counts_synth},
        columns=HISTOGRAM_COLUMNS,
    )


def compare_json(frame: pd.DataFrame) -> str:
    """JSON object keyed by metric id; NaN values become null."""
    payload: Dict[str, Dict[str, object]] = {}
    for row in frame.to_dict(orient="records"):
        payload[row["metric"]] = {
            key: (None if isinstance(value, float) and np.isnan(value) else value)
            for key, value in row.items()
            if key != "metric"
        }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def replicate_report(
    target: Graph,
    mixture: MixtureConfig,
    desired_nodes: int,
    replicates: int,
    seed: int,
) -> pd.DataFrame:
    """Mean and standard deviation of error_m over independently seeded syntheses."""
    target_summary = summarize(target, seed)
    errors: Dict[MetricId, List[float]] = {metric: [] for metric in MetricId}
    for child in np.random.SeedSequence(seed).spawn(replicates):
        rng = np.random.default_rng(child)
        graph = synthesize(mixture, desired_nodes, rng)
        synth_summary = summarize(graph, seed)
        for metric in MetricId:
            errors[metric].append(summary_error(target_summary, synth_summary, metric))
        logger.debug("report_replicate_done", nodes=graph.node_count, edges=graph.edge_count)

    rows = [
        {
            "metric": metric.value,
            "mean_error": float(np.mean(values)),
            "std_error": float(np.std(values)),
            "replicates": replicates,
        }
        for metric, values in errors.items()
    ]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format="%.10g", lineterminator="\n")
