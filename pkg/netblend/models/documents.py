"""JSON documents read and written by the command line: run configurations and fitted models."""
import hashlib
import math
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from netblend.models.mixture import Chromosome, GaConfig, GaResult, GeneRanges, MixtureConfig
from netblend.models.summary import MetricWeights

PathLike = Union[str, Path]

MODEL_FORMAT = "netblend-model/1"


class RunConfig(BaseModel):
    """Flat key-value settings of a ``fit`` run.

    Keys absent from the file take the GA defaults; unknown keys are rejected.
    """

    model_config = ConfigDict(extra="forbid")

    population_size: int = Field(default=400, ge=2)
    generations: int = Field(default=200, ge=1)
    p_crossover: float = Field(default=0.9, ge=0.0, le=1.0)
    p_mutation: float = Field(default=0.2, ge=0.0, le=1.0)
    tournament_size: int = Field(default=3, ge=1)
    gene_mutation_rate: float = Field(default=0.3, ge=0.0, le=1.0)
    elitism_count: int = Field(default=1, ge=0)
    eval_size: Optional[int] = Field(default=None, ge=4)
    fitness_replicates: int = Field(default=1, ge=1)
    validation_replicates: int = Field(default=5, ge=0)
    validation_candidates: int = Field(default=8, ge=1)
    seed: Optional[int] = Field(default=None, ge=0)
    threads: Optional[int] = Field(default=None, ge=1)

    w_ddqc: float = Field(default=1.0, ge=0.0)
    w_clustering: float = Field(default=1.0, ge=0.0)
    w_transitivity: float = Field(default=1.0, ge=0.0)
    w_assortativity: float = Field(default=1.0, ge=0.0)
    w_modularity: float = Field(default=1.0, ge=0.0)

    desired_nodes: Optional[int] = Field(default=None, ge=4, description="Defaults to the target size")
    target_path: Optional[str] = None
    output_path: Optional[str] = None
    history_path: Optional[str] = None

    @classmethod
    def load(cls, path: PathLike) -> "RunConfig":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Copy with every non-None override applied, re-validated."""
        data = self.model_dump()
        data.update({key: value for key, value in overrides.items() if value is not None})
        return RunConfig.model_validate(data)

    def to_ga_config(self) -> GaConfig:
        return GaConfig(**self.model_dump(include=set(GaConfig.model_fields)))

    def weights(self) -> MetricWeights:
        return MetricWeights(**self.model_dump(include=set(MetricWeights.model_fields)))


class Provenance(BaseModel):
    """Where a fitted model came from."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    target_sha256: str = Field(..., min_length=64, max_length=64)
    target_nodes: int = Field(..., ge=2)
    target_edges: int = Field(..., ge=1)
    seed: int = Field(..., ge=0)
    tool_version: str
    final_fitness: Optional[float] = Field(default=None, ge=0.0, description="None if every evaluation failed")
    eval_size: int = Field(..., ge=4)
    generations: int = Field(..., ge=1)
    population_size: int = Field(..., ge=2)


class ModelDocument(BaseModel):
    """A fitted mixture model as stored on disk."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    format: str = MODEL_FORMAT
    genes: Chromosome
    target_assortativity: float = Field(..., ge=-1.0, le=1.0)
    gene_ranges: GeneRanges
    provenance: Provenance

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v != MODEL_FORMAT:
            raise ValueError(f"unsupported model format {v!r}, expected {MODEL_FORMAT!r}")
        return v

    @model_validator(mode="after")
    def check_genes_in_ranges(self) -> "ModelDocument":
        if not self.gene_ranges.contains(self.genes):
            raise ValueError("genes fall outside the recorded gene ranges")
        return self

    @classmethod
    def from_result(
        cls,
        result: GaResult,
        target_sha256: str,
        target_nodes: int,
        target_edges: int,
        cfg: GaConfig,
        tool_version: str,
    ) -> "ModelDocument":
        fitness = result.best_fitness if math.isfinite(result.best_fitness) else None
        return cls(
            genes=result.best,
            target_assortativity=result.target_assortativity,
            gene_ranges=result.gene_ranges,
            provenance=Provenance(
                target_sha256=target_sha256,
                target_nodes=target_nodes,
                target_edges=target_edges,
                seed=result.seed,
                tool_version=tool_version,
                final_fitness=fitness,
                eval_size=result.eval_size,
                generations=cfg.generations,
                population_size=cfg.population_size,
            ),
        )

    @classmethod
    def load(cls, path: PathLike) -> "ModelDocument":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    def dumps(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    def to_mixture_config(self) -> MixtureConfig:
        return self.genes.to_mixture(self.target_assortativity)


def file_sha256(path: PathLike) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()
