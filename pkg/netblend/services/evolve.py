"""Genetic search over mixture configurations.

A population of chromosomes is evolved with tournament selection, uniform
crossover, per-gene mutation and elitism. Fitness is the weighted-L1
distance between the target summary and the summary of a graph synthesized
from the chromosome; lower is better and failed syntheses score ``inf``.

Every fitness evaluation is seeded from (master seed, generation, index), so
a run is reproducible regardless of how evaluations are spread over worker
processes.
"""
import math
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from netblend.core.config import get_settings
from netblend.models.graph import Graph
from netblend.models.mixture import (
    GENE_NAMES,
    INTEGER_GENES,
    PROBABILITY_GENES,
    Chromosome,
    FitnessRecord,
    GaConfig,
    GaResult,
    GeneRanges,
)
from netblend.models.summary import GraphSummary, MetricWeights
from netblend.services.distance import net_distance, summarize
from netblend.services.processes import synthesize_traced
from netblend.utils.errors import GraphArgumentError, InfeasibleRangeError, NetblendError
from netblend.utils.logging import LoggerMixin, evolve_logger, setup_logging
from netblend.utils.metrics import MetricsCollector, time_block

# Share of probability mass given back to the processes when repair finds all four at zero
RESAMPLED_PROBABILITY_MASS = 0.5
SUM_TOLERANCE = 1e-12


def derive_gene_ranges(target_nodes: int, target_edges: int, desired_nodes: int) -> GeneRanges:
    """Gene intervals implied by the target's size and density.

    m is centred on E/N and k on the mean degree 2E/N, both +-2. The batch
    size n must exceed the largest admissible k so a TRA ring always fits.
    """
    if target_nodes < 2 or target_edges < 1:
        raise GraphArgumentError(
            f"gene ranges need a target with >= 2 nodes and >= 1 edge, "
            f"got N={target_nodes}, E={target_edges}"
        )
    ratio = target_edges / target_nodes
    mean_degree = 2 * target_edges / target_nodes

    m_range = (max(1, math.floor(ratio) - 2), math.ceil(ratio) + 2)

    k_low = max(2, math.floor(mean_degree) - 2)
    k_high = math.ceil(mean_degree) + 2
    k_range = (k_low + k_low % 2, k_high - k_high % 2)

    k_max = k_range[1]
    if desired_nodes <= k_max:
        raise InfeasibleRangeError(
            f"desired size {desired_nodes} must exceed the largest lattice degree {k_max}",
            {"desired_nodes": desired_nodes, "k_max": k_max},
        )

    return GeneRanges(
        n=(k_max + 1, desired_nodes),
        m=m_range,
        k=k_range,
        n_adm=(1, max(1, target_nodes // 2)),
    )


def _draw_gene(name: str, r: GeneRanges, rng: np.random.Generator) -> float:
    lower, upper = r.bounds(name)
    if name == "k":
        return int(rng.integers(lower // 2, upper // 2 + 1)) * 2
    if name in INTEGER_GENES:
        return int(rng.integers(lower, upper + 1))
    return float(rng.uniform(lower, upper))


def _snap_even(value: int, lower: int, upper: int) -> int:
    # Odd values sit exactly between two evens; take the lower one
    if value % 2:
        value -= 1
    return min(upper, max(lower, value))


def _repair_genes(genes: Dict[str, float], r: GeneRanges, rng: Optional[np.random.Generator]) -> Chromosome:
    fixed: Dict[str, float] = {}
    for name in GENE_NAMES:
        lower, upper = r.bounds(name)
        value = genes[name]
        if name == "k":
            fixed[name] = _snap_even(int(round(value)), lower, upper)
        elif name in INTEGER_GENES:
            fixed[name] = int(min(upper, max(lower, round(value))))
        else:
            fixed[name] = float(min(upper, max(lower, value)))

    total = sum(fixed[name] for name in PROBABILITY_GENES)
    if total > 1.0 + SUM_TOLERANCE:
        for name in PROBABILITY_GENES:
            fixed[name] /= total
    elif total <= 0.0:
        if rng is None:
            draws = [1.0] * len(PROBABILITY_GENES)
        else:
            draws = [float(x) for x in rng.random(len(PROBABILITY_GENES))]
        scale = RESAMPLED_PROBABILITY_MASS / sum(draws)
        for name, draw in zip(PROBABILITY_GENES, draws):
            fixed[name] = draw * scale
    return Chromosome(**fixed)


def repair(c: Chromosome, r: GeneRanges, rng: Optional[np.random.Generator] = None) -> Chromosome:
    """Bring a chromosome back inside ``r`` and the probability-sum constraint.

    Genes are clamped, integer genes rounded and k snapped to an even value.
    An over-full probability vector is divided by its sum; an all-zero one is
    redrawn and scaled to sum 0.5 (an equal split without ``rng``).
    """
    return _repair_genes(c.genes(), r, rng)


def random_chromosome(r: GeneRanges, rng: np.random.Generator) -> Chromosome:
    genes = {name: _draw_gene(name, r, rng) for name in GENE_NAMES}
    return _repair_genes(genes, r, rng)


def uniform_crossover(
    a: Chromosome, b: Chromosome, r: GeneRanges, rng: np.random.Generator
) -> Tuple[Chromosome, Chromosome]:
    """Swap each gene between the parents with probability 0.5."""
    genes_a, genes_b = a.genes(), b.genes()
    swap = rng.random(len(GENE_NAMES)) < 0.5
    child_a: Dict[str, float] = {}
    child_b: Dict[str, float] = {}
    for name, swapped in zip(GENE_NAMES, swap):
        if swapped:
            child_a[name], child_b[name] = genes_b[name], genes_a[name]
        else:
            child_a[name], child_b[name] = genes_a[name], genes_b[name]
    return _repair_genes(child_a, r, rng), _repair_genes(child_b, r, rng)


def mutate(c: Chromosome, r: GeneRanges, rng: np.random.Generator, gene_rate: float) -> Chromosome:
    """Redraw each gene uniformly from its interval with probability ``gene_rate``."""
    genes = c.genes()
    hits = rng.random(len(GENE_NAMES)) < gene_rate
    for name, hit in zip(GENE_NAMES, hits):
        if hit:
            genes[name] = _draw_gene(name, r, rng)
    return _repair_genes(genes, r, rng)


def tournament_index(fitnesses: Sequence[float], k: int, rng: np.random.Generator) -> int:
    """Index of the fittest of ``k`` distinct uniformly drawn members; ties go to the lowest index."""
    if not fitnesses:
        raise GraphArgumentError("tournament needs a non-empty population")
    if not 1 <= k <= len(fitnesses):
        raise GraphArgumentError(f"tournament size {k} outside [1, {len(fitnesses)}]")
    contestants = rng.choice(len(fitnesses), size=k, replace=False)
    return min((int(i) for i in contestants), key=lambda i: (fitnesses[i], i))


def tournament_select(
    population: Sequence[Chromosome], fitnesses: Sequence[float], k: int, rng: np.random.Generator
) -> Chromosome:
    return population[tournament_index(fitnesses, k, rng)]


def individual_seed(master_seed: int, generation: int, index: int) -> int:
    """Seed of one fitness evaluation, independent of evaluation order."""
    state = np.random.SeedSequence(master_seed, spawn_key=(generation, index)).generate_state(1, np.uint64)
    return int(state[0])


def replicate_seeds(seed: int, replicates: int) -> List[int]:
    if replicates == 1:
        return [seed]
    return [
        int(np.random.SeedSequence(seed, spawn_key=(i,)).generate_state(1, np.uint64)[0])
        for i in range(replicates)
    ]


@dataclass
class EvaluationOutcome:
    """What a worker sends back for one chromosome."""
    fitness: float
    duration: float = 0.0
    process_counts: List[Dict[str, int]] = field(default_factory=list)
    adm_commits: List[int] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return math.isinf(self.fitness)


def _score(
    c: Chromosome,
    target: GraphSummary,
    eval_nodes: int,
    replicates: int,
    seed: int,
    weights: MetricWeights,
) -> EvaluationOutcome:
    outcome = EvaluationOutcome(fitness=math.inf)
    with time_block() as timing:
        try:
            mixture = c.to_mixture(target.assortativity)
            distances = []
            for replicate_seed in replicate_seeds(seed, replicates):
                graph, trace = synthesize_traced(
                    mixture, eval_nodes, np.random.default_rng(replicate_seed)
                )
                outcome.process_counts.append(trace.process_counts)
                outcome.adm_commits.append(trace.adm_commits)
                summary = summarize(graph, replicate_seed, include_properties=False)
                distances.append(net_distance(target, summary, weights))
            outcome.fitness = float(np.mean(distances))
        except (NetblendError, ValueError, ArithmeticError) as exc:
            evolve_logger.warning(
                "fitness_evaluation_failed",
                error=str(exc),
                exception_type=type(exc).__name__,
                chromosome=c.genes(),
            )
    outcome.duration = timing["duration"]
    return outcome


def evaluate_fitness(
    c: Chromosome,
    target: GraphSummary,
    cfg: GaConfig,
    seed: int,
    weights: Optional[MetricWeights] = None,
    eval_nodes: Optional[int] = None,
) -> float:
    """NetDistance between ``target`` and a graph synthesized from ``c``.

    ``eval_nodes`` defaults to the size resolved from ``cfg`` for the target.
    With several replicates the mean over independently seeded syntheses is
    returned. Failed syntheses give ``inf``.
    """
    nodes = eval_nodes if eval_nodes is not None else cfg.resolved_eval_size(target.node_count)
    return _score(c, target, nodes, cfg.fitness_replicates, seed, weights or MetricWeights()).fitness


def _evaluate_task(task: Tuple[Chromosome, GraphSummary, int, int, int, MetricWeights]) -> EvaluationOutcome:
    # Top level so the process pool can pickle it
    return _score(*task)


def _init_worker(log_level: str, log_format: str) -> None:
    setup_logging(log_level, log_format)


class GeneticSearch(LoggerMixin):
    """Runs one genetic search against a fixed target summary."""

    def __init__(
        self,
        target_summary: GraphSummary,
        ranges: GeneRanges,
        cfg: GaConfig,
        seed: int,
        eval_nodes: int,
        weights: MetricWeights,
        executor: Optional[Executor] = None,
    ):
        self.target_summary = target_summary
        self.ranges = ranges
        self.cfg = cfg
        self.seed = seed
        self.eval_nodes = eval_nodes
        self.weights = weights
        self.executor = executor
        self.rng = np.random.default_rng(np.random.SeedSequence(seed))

    def evaluate(
        self,
        population: Sequence[Chromosome],
        generation: int,
        start: int = 0,
        replicates: Optional[int] = None,
    ) -> List[float]:
        """Fitness of ``population``, whose first member sits at ``start`` in the generation."""
        replicates = replicates or self.cfg.fitness_replicates
        tasks = [
            (
                c,
                self.target_summary,
                self.eval_nodes,
                replicates,
                individual_seed(self.seed, generation, start + i),
                self.weights,
            )
            for i, c in enumerate(population)
        ]
        if self.executor is None:
            outcomes = [_evaluate_task(task) for task in tasks]
        else:
            outcomes = list(self.executor.map(_evaluate_task, tasks))

        for outcome in outcomes:
            MetricsCollector.record_fitness_evaluation(
                outcome.duration, "failed" if outcome.failed else "ok"
            )
            for counts, commits in zip(outcome.process_counts, outcome.adm_commits):
                MetricsCollector.record_synthesis(counts, commits)
        return [outcome.fitness for outcome in outcomes]

    def breed(self, population: Sequence[Chromosome], fitnesses: Sequence[float], count: int) -> List[Chromosome]:
        """Produce ``count`` offspring by selection, crossover and mutation."""
        cfg = self.cfg
        offspring: List[Chromosome] = []
        while len(offspring) < count:
            first = tournament_select(population, fitnesses, cfg.tournament_size, self.rng)
            second = tournament_select(population, fitnesses, cfg.tournament_size, self.rng)
            if self.rng.random() < cfg.p_crossover:
                children = uniform_crossover(first, second, self.ranges, self.rng)
            else:
                children = (first, second)
            for child in children:
                if self.rng.random() < cfg.p_mutation:
                    child = mutate(child, self.ranges, self.rng, cfg.gene_mutation_rate)
                offspring.append(child)
        return offspring[:count]

    def _record(self, generation: int, population: Sequence[Chromosome], fitnesses: Sequence[float]) -> FitnessRecord:
        best = min(range(len(fitnesses)), key=lambda i: (fitnesses[i], i))
        finite = [f for f in fitnesses if math.isfinite(f)]
        return FitnessRecord(
            generation=generation,
            best_fitness=fitnesses[best],
            mean_fitness=float(np.mean(finite)) if finite else math.inf,
            failed_evaluations=len(fitnesses) - len(finite),
            best_chromosome=population[best],
        )

    def run(self) -> GaResult:
        cfg = self.cfg
        population = [random_chromosome(self.ranges, self.rng) for _ in range(cfg.population_size)]
        history: List[FitnessRecord] = []
        best: Optional[Chromosome] = None
        best_fitness = math.inf

        for generation in range(cfg.generations):
            with time_block() as timing:
                if generation == 0:
                    fitnesses = self.evaluate(population, generation)
                else:
                    ranked = sorted(range(len(population)), key=lambda i: (fitnesses[i], i))
                    elites = ranked[: cfg.elitism_count]
                    offspring = self.breed(population, fitnesses, cfg.population_size - len(elites))
                    # Elite fitness is cached rather than re-evaluated
                    elite_fitnesses = [fitnesses[i] for i in elites]
                    offspring_fitnesses = self.evaluate(offspring, generation, start=len(elites))
                    population = [population[i] for i in elites] + offspring
                    fitnesses = elite_fitnesses + offspring_fitnesses

                record = self._record(generation, population, fitnesses)
            history.append(record)
            if best is None or record.best_fitness < best_fitness:
                best, best_fitness = record.best_chromosome, record.best_fitness

            MetricsCollector.record_generation(timing["duration"], best_fitness)
            self.logger.info(
                "generation_complete",
                generation=generation,
                best_fitness=record.best_fitness,
                mean_fitness=record.mean_fitness,
                failed_evaluations=record.failed_evaluations,
                duration_s=round(timing["duration"], 3),
            )

        validated = False
        if cfg.validation_replicates > 0:
            finalists = self.finalists(population, fitnesses, history)
            if finalists:
                best, best_fitness = self.validate(finalists)
                validated = True

        return GaResult(
            best=best,
            best_fitness=best_fitness,
            validated=validated,
            history=history,
            gene_ranges=self.ranges,
            target_assortativity=self.target_summary.assortativity,
            seed=self.seed,
            eval_size=self.eval_nodes,
        )

    def finalists(
        self,
        population: Sequence[Chromosome],
        fitnesses: Sequence[float],
        history: Sequence[FitnessRecord],
    ) -> List[Chromosome]:
        """Distinct candidates for validation: the final population by rank, then earlier generation bests."""
        ranked = sorted(range(len(population)), key=lambda i: (fitnesses[i], i))
        pool = [population[i] for i in ranked if math.isfinite(fitnesses[i])]
        pool += [record.best_chromosome for record in reversed(history) if math.isfinite(record.best_fitness)]
        chosen: List[Chromosome] = []
        for c in pool:
            if c not in chosen:
                chosen.append(c)
            if len(chosen) == self.cfg.validation_candidates:
                break
        return chosen

    def validate(self, finalists: Sequence[Chromosome]) -> Tuple[Chromosome, float]:
        """Re-score ``finalists`` on seeds no generation used and keep the lowest mean."""
        scores = self.evaluate(
            finalists, self.cfg.generations, replicates=self.cfg.validation_replicates
        )
        winner = min(range(len(finalists)), key=lambda i: (scores[i], i))
        self.logger.info(
            "validation_complete",
            candidates=len(finalists),
            replicates=self.cfg.validation_replicates,
            best_fitness=scores[winner],
            winner_rank=winner,
        )
        return finalists[winner], scores[winner]


def draw_seed() -> int:
    """Fresh 63-bit seed from OS entropy, for runs started without one."""
    return int(np.random.SeedSequence().generate_state(1, np.uint64)[0] >> np.uint64(1))


def run_ga(
    target: Graph,
    desired_nodes: int,
    cfg: GaConfig,
    weights: Optional[MetricWeights] = None,
    threads: int = 1,
) -> GaResult:
    """Evolve a mixture configuration imitating ``target``.

    Fitness graphs have ``cfg.eval_size`` nodes, or min(target size, 1000)
    when unset. Gene ranges are derived against ``desired_nodes``; a batch
    larger than the evaluation budget is cut to what remains. ``threads > 1`` spreads evaluations over a process pool; the
    result does not depend on it.
    """
    seed = cfg.seed if cfg.seed is not None else draw_seed()
    eval_nodes = cfg.resolved_eval_size(target.node_count)
    ranges = derive_gene_ranges(target.node_count, target.edge_count, desired_nodes)
    target_summary = summarize(target, seed, include_properties=False)
    weights = weights or MetricWeights()

    evolve_logger.info(
        "ga_started",
        seed=seed,
        population_size=cfg.population_size,
        generations=cfg.generations,
        eval_size=eval_nodes,
        threads=threads,
        target_nodes=target.node_count,
        target_edges=target.edge_count,
    )

    if threads <= 1:
        result = GeneticSearch(target_summary, ranges, cfg, seed, eval_nodes, weights).run()
    else:
        settings = get_settings()
        with ProcessPoolExecutor(
            max_workers=threads,
            initializer=_init_worker,
            initargs=(settings.log_level, settings.log_format),
        ) as executor:
            result = GeneticSearch(
                target_summary, ranges, cfg, seed, eval_nodes, weights, executor
            ).run()

    evolve_logger.info("ga_finished", seed=seed, best_fitness=result.best_fitness)
    return result
