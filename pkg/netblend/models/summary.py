"""Pydantic models for graph summaries and distance weights."""
from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class PropertyKind(str, Enum):
    """Per-node properties whose distributions are compared with KS."""
    DEGREE = "degree"
    LOCAL_CLUSTERING = "local-clustering"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    EIGENVECTOR = "eigenvector"
    PAGERANK = "pagerank"


class MetricId(str, Enum):
    """Every metric reported by ``compare``: five global measures plus six distributions."""
    AVG_CLUSTERING = "avg-clustering"
    TRANSITIVITY = "transitivity"
    ASSORTATIVITY = "assortativity"
    MODULARITY = "modularity"
    DDQC = "ddqc"
    DEGREE = "degree"
    LOCAL_CLUSTERING = "local-clustering"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    EIGENVECTOR = "eigenvector"
    PAGERANK = "pagerank"

    @property
    def property_kind(self) -> "PropertyKind | None":
        """The node property behind a distribution metric, else None."""
        try:
            return PropertyKind(self.value)
        except ValueError:
            return None


GLOBAL_METRICS = (
    MetricId.AVG_CLUSTERING,
    MetricId.TRANSITIVITY,
    MetricId.ASSORTATIVITY,
    MetricId.MODULARITY,
)


class GraphSummary(BaseModel):
    """Cached metrics of a graph, used as the reference side of comparisons."""

    model_config = ConfigDict(frozen=True)

    avg_clustering: float = Field(..., ge=0.0, le=1.0)
    transitivity: float = Field(..., ge=0.0, le=1.0)
    assortativity: float = Field(..., ge=-1.0, le=1.0)
    modularity: float = Field(..., ge=-1.0, le=1.0)
    ddqc_features: List[float] = Field(..., min_length=8, max_length=8)
    node_count: int = Field(..., ge=0)
    edge_count: int = Field(..., ge=0)
    property_samples: Dict[PropertyKind, List[float]] = Field(default_factory=dict)
    degenerate_metrics: List[str] = Field(
        default_factory=list,
        description="Metrics that fell back to a conventional value on degenerate input",
    )

    @field_validator("ddqc_features")
    @classmethod
    def validate_ddqc(cls, v: List[float]) -> List[float]:
        if any(x < 0 for x in v):
            raise ValueError("ddqc features must be non-negative")
        if abs(sum(v) - 1.0) > 1e-9:
            raise ValueError(f"ddqc features must sum to 1, got {sum(v)}")
        return v

    def metric(self, metric: MetricId) -> float:
        """Scalar value of a global metric."""
        return {
            MetricId.AVG_CLUSTERING: self.avg_clustering,
            MetricId.TRANSITIVITY: self.transitivity,
            MetricId.ASSORTATIVITY: self.assortativity,
            MetricId.MODULARITY: self.modularity,
        }[metric]


class MetricWeights(BaseModel):
    """Weights of the weighted-L1 distance between two summaries."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    w_ddqc: float = Field(default=1.0, ge=0.0)
    w_clustering: float = Field(default=1.0, ge=0.0)
    w_transitivity: float = Field(default=1.0, ge=0.0)
    w_assortativity: float = Field(default=1.0, ge=0.0)
    w_modularity: float = Field(default=1.0, ge=0.0)

    @model_validator(mode="after")
    def require_positive_weight(self) -> "MetricWeights":
        if not any(w > 0 for w in self.as_tuple()):
            raise ValueError("at least one distance weight must be positive")
        return self

    def as_tuple(self) -> tuple:
        return (
            self.w_ddqc,
            self.w_clustering,
            self.w_transitivity,
            self.w_assortativity,
            self.w_modularity,
        )

    @classmethod
    def parse_csv(cls, text: str) -> "MetricWeights":
        """Parse ``ddqc,clustering,transitivity,assortativity,modularity``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise ValueError(f"expected 5 comma-separated weights, got {len(parts)}")
        values = [float(p) for p in parts]
        return cls(
            w_ddqc=values[0],
            w_clustering=values[1],
            w_transitivity=values[2],
            w_assortativity=values[3],
            w_modularity=values[4],
        )
