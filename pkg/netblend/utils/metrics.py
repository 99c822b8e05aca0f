"""Prometheus metrics for long-running fits and syntheses."""
import time
from contextlib import contextmanager
from typing import Iterator, Mapping

from prometheus_client import CollectorRegistry, Counter, Gauge, Histogram, write_to_textfile

# Private registry so library users never collide with their own default registry
REGISTRY = CollectorRegistry()

FITNESS_EVALUATIONS = Counter(
    "netblend_fitness_evaluations_total",
    "Total number of chromosome fitness evaluations",
    ["outcome"],
    registry=REGISTRY,
)

FITNESS_EVALUATION_DURATION = Histogram(
    "netblend_fitness_evaluation_duration_seconds",
    "Time spent synthesizing and scoring one chromosome",
    buckets=(0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0),
    registry=REGISTRY,
)

GENERATION_DURATION = Histogram(
    "netblend_generation_duration_seconds",
    "Time spent on one GA generation",
    buckets=(0.1, 0.5, 1.0, 5.0, 10.0, 30.0, 60.0, 300.0, 900.0),
    registry=REGISTRY,
)

BEST_FITNESS = Gauge(
    "netblend_best_fitness",
    "Best fitness found so far in the current run",
    registry=REGISTRY,
)

SYNTHESIZED_GRAPHS = Counter(
    "netblend_synthesized_graphs_total",
    "Total number of graphs synthesized from mixture configurations",
    registry=REGISTRY,
)

PROCESS_SELECTIONS = Counter(
    "netblend_process_selections_total",
    "Number of times each formation process was selected",
    ["process"],
    registry=REGISTRY,
)

ADM_COMMITS = Counter(
    "netblend_adm_commits_total",
    "Edge toggles committed by the assortativity-mixing process",
    registry=REGISTRY,
)


class MetricsCollector:
    """Helper class for collecting run metrics."""

    @staticmethod
    def record_fitness_evaluation(duration: float, status: str = "ok") -> None:
        """Record one fitness evaluation."""
        FITNESS_EVALUATIONS.labels(outcome=status).inc()
        FITNESS_EVALUATION_DURATION.observe(duration)

    @staticmethod
    def record_generation(duration: float, best_fitness: float) -> None:
        """Record a completed generation."""
        GENERATION_DURATION.observe(duration)
        BEST_FITNESS.set(best_fitness)

    @staticmethod
    def record_synthesis(process_counts: Mapping[str, int], adm_commits: int) -> None:
        """Record a finished synthesis run and its process usage."""
        SYNTHESIZED_GRAPHS.inc()
        for process, count in process_counts.items():
            if count:
                PROCESS_SELECTIONS.labels(process=process).inc(count)
        if adm_commits:
            ADM_COMMITS.inc(adm_commits)


@contextmanager
def time_block() -> Iterator[dict]:
    """Measure wall time of a block; the yielded dict receives ``duration``."""
    timing: dict = {}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["duration"] = time.perf_counter() - start


def export_metrics(path: str) -> None:
    """Write the registry in the Prometheus text exposition format."""
    write_to_textfile(path, REGISTRY)
