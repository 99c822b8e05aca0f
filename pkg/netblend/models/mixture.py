"""Pydantic models for mixture configurations and the genetic search over them."""
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Tolerance on the probability-sum constraint after floating-point normalization
PROBABILITY_SLACK = 1e-9


class ProcessKind(str, Enum):
    """Candidate network-formation processes."""
    TRA = "TRA"  # ring lattice with random rewiring
    PA = "PA"  # preferential attachment
    MA = "MA"  # neighbourhood copying
    ADM = "ADM"  # assortativity-steering edge toggles


NODE_ADDING_PROCESSES = (ProcessKind.PA, ProcessKind.TRA, ProcessKind.MA)

PROBABILITY_GENES = ("p_pa", "p_tra", "p_ma", "p_adm")
INTEGER_GENES = ("n", "m", "k", "n_adm")
GENE_NAMES = ("n", "p_pa", "p_tra", "p_ma", "p_adm", "m", "k", "p_rewiring", "p_copying", "n_adm")


class Chromosome(BaseModel):
    """Process probabilities and process parameters evolved by the GA."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(..., ge=1, description="Nodes added per growth step")
    p_pa: float = Field(..., ge=0.0, le=1.0)
    p_tra: float = Field(..., ge=0.0, le=1.0)
    p_ma: float = Field(..., ge=0.0, le=1.0)
    p_adm: float = Field(..., ge=0.0, le=1.0)
    m: int = Field(..., ge=1, description="Preferential-attachment links per newcomer")
    k: int = Field(..., ge=2, description="Ring-lattice degree of a TRA step")
    p_rewiring: float = Field(..., ge=0.0, le=1.0)
    p_copying: float = Field(..., ge=0.0, le=1.0)
    n_adm: int = Field(..., ge=1, description="Node pairs tried by one ADM step")

    @property
    def probabilities(self) -> Tuple[float, float, float, float]:
        """(p_pa, p_tra, p_ma, p_adm)."""
        return (self.p_pa, self.p_tra, self.p_ma, self.p_adm)

    def genes(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in GENE_NAMES}

    def to_mixture(self, target_assortativity: float) -> "MixtureConfig":
        return MixtureConfig(**self.genes(), target_assortativity=target_assortativity)


class MixtureConfig(Chromosome):
    """A complete, runnable mixture model."""

    target_assortativity: float = Field(default=0.0, ge=-1.0, le=1.0)

    @model_validator(mode="after")
    def check_invariants(self) -> "MixtureConfig":
        total = sum(self.probabilities)
        if total <= 0.0 or total > 1.0 + PROBABILITY_SLACK:
            raise ValueError(f"process probabilities must sum to (0, 1], got {total}")
        if self.k % 2:
            raise ValueError(f"lattice degree k must be even, got {self.k}")
        if self.n < self.k + 1:
            raise ValueError(f"n must be at least k + 1 = {self.k + 1}, got {self.n}")
        return self

    def chromosome(self) -> Chromosome:
        return Chromosome(**self.genes())


class GeneRanges(BaseModel):
    """Closed interval of admissible values per gene."""

    model_config = ConfigDict(frozen=True)

    n: Tuple[int, int]
    m: Tuple[int, int]
    k: Tuple[int, int]
    n_adm: Tuple[int, int]
    p_pa: Tuple[float, float] = (0.0, 1.0)
    p_tra: Tuple[float, float] = (0.0, 1.0)
    p_ma: Tuple[float, float] = (0.0, 1.0)
    p_adm: Tuple[float, float] = (0.0, 1.0)
    p_rewiring: Tuple[float, float] = (0.0, 1.0)
    p_copying: Tuple[float, float] = (0.0, 1.0)

    @model_validator(mode="after")
    def check_intervals(self) -> "GeneRanges":
        for name in GENE_NAMES:
            lower, upper = getattr(self, name)
            if lower > upper:
                raise ValueError(f"gene {name}: lower bound {lower} exceeds upper bound {upper}")
        if self.k[0] % 2 or self.k[1] % 2:
            raise ValueError("lattice degree bounds must be even")
        return self

    def bounds(self, gene: str) -> Tuple[float, float]:
        return getattr(self, gene)

    def contains(self, c: Chromosome) -> bool:
        """Every gene in range, k even, probability sum within [0, 1]."""
        for name in GENE_NAMES:
            lower, upper = self.bounds(name)
            value = getattr(c, name)
            if value < lower - PROBABILITY_SLACK or value > upper + PROBABILITY_SLACK:
                return False
        return c.k % 2 == 0 and sum(c.probabilities) <= 1.0 + PROBABILITY_SLACK


class GaConfig(BaseModel):
    """Settings of the genetic search."""

    model_config = ConfigDict(extra="forbid")

    population_size: int = Field(default=400, ge=2)
    generations: int = Field(default=200, ge=1)
    p_crossover: float = Field(default=0.9, ge=0.0, le=1.0)
    p_mutation: float = Field(default=0.2, ge=0.0, le=1.0)
    tournament_size: int = Field(default=3, ge=1)
    gene_mutation_rate: float = Field(default=0.3, ge=0.0, le=1.0)
    elitism_count: int = Field(default=1, ge=0)
    eval_size: Optional[int] = Field(
        default=None, ge=4, description="Nodes per fitness synthesis; None means min(target N, 1000)"
    )
    fitness_replicates: int = Field(default=1, ge=1)
    validation_replicates: int = Field(
        default=5, ge=0, description="Fresh syntheses per finalist after the last generation; 0 disables"
    )
    validation_candidates: int = Field(default=8, ge=1)
    seed: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_population_bounds(self) -> "GaConfig":
        if self.tournament_size > self.population_size:
            raise ValueError(
                f"tournament_size {self.tournament_size} exceeds population_size {self.population_size}"
            )
        if self.elitism_count >= self.population_size:
            raise ValueError("elitism_count must be smaller than population_size")
        return self

    def resolved_eval_size(self, target_nodes: int) -> int:
        return self.eval_size if self.eval_size is not None else max(4, min(target_nodes, 1000))


class FitnessRecord(BaseModel):
    """Outcome of one generation."""

    model_config = ConfigDict(frozen=True)

    generation: int
    best_fitness: float
    mean_fitness: float
    failed_evaluations: int = 0
    best_chromosome: Chromosome


class GaResult(BaseModel):
    """Best individual of a run and the per-generation history.

    When validation ran, ``best`` is the finalist with the lowest mean
    distance over fresh seeds and ``best_fitness`` is that mean; otherwise
    both come from the last generation.
    """

    model_config = ConfigDict(frozen=True)

    best: Chromosome
    best_fitness: float
    validated: bool = False
    history: List[FitnessRecord]
    gene_ranges: GeneRanges
    target_assortativity: float
    seed: int
    eval_size: int
