"""``netblend fit``: evolve a mixture model that imitates a target graph."""
import argparse
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd

from netblend import __version__
from netblend.commands.common import OutputSet, resolve_seed
from netblend.core.config import get_settings
from netblend.models.documents import ModelDocument, RunConfig, file_sha256
from netblend.models.mixture import GaResult
from netblend.models.summary import MetricWeights
from netblend.services.evolve import run_ga
from netblend.services.graph_io import load_graph
from netblend.services.reporting import to_csv
from netblend.utils.errors import ConfigError
from netblend.utils.logging import cli_logger as logger

DEFAULT_OUTPUT = "model.json"
HISTORY_COLUMNS = ["generation", "best_fitness", "mean_fitness", "failed_evaluations"]


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("fit", help="Fit a mixture model to a target edge list")
    parser.add_argument("target", nargs="?", help="Target edge-list file (or target_path in --config)")
    parser.add_argument("--config", help="RunConfig JSON file; flags override its keys")
    parser.add_argument("--pop", dest="population_size", type=int, help="Population size (400)")
    parser.add_argument("--gens", dest="generations", type=int, help="Generations (200)")
    parser.add_argument("--pc", dest="p_crossover", type=float, help="Crossover probability (0.9)")
    parser.add_argument("--pm", dest="p_mutation", type=float, help="Mutation probability (0.2)")
    parser.add_argument("--tournament", dest="tournament_size", type=int, help="Tournament size (3)")
    parser.add_argument("--gene-mutation-rate", dest="gene_mutation_rate", type=float, help="Per-gene mutation rate (0.3)")
    parser.add_argument("--elites", dest="elitism_count", type=int, help="Elite individuals carried over (1)")
    parser.add_argument("--eval-size", dest="eval_size", type=int, help="Nodes per fitness synthesis")
    parser.add_argument("--replicates", dest="fitness_replicates", type=int, help="Syntheses averaged per fitness (1)")
    parser.add_argument(
        "--validation-replicates", dest="validation_replicates", type=int,
        help="Fresh syntheses per finalist after the last generation (5; 0 disables)",
    )
    parser.add_argument("--finalists", dest="validation_candidates", type=int, help="Finalists re-scored (8)")
    parser.add_argument("--seed", type=int, help="Master seed; drawn from entropy when omitted")
    parser.add_argument("--threads", type=int, help="Fitness worker processes")
    parser.add_argument("--weights", help="ddqc,clustering,transitivity,assortativity,modularity")
    parser.add_argument("-n", "--desired-nodes", dest="desired_nodes", type=int, help="Synthesis size (target size)")
    parser.add_argument("-o", "--output", dest="output_path", help=f"Model JSON path ({DEFAULT_OUTPUT})")
    parser.add_argument("--history", dest="history_path", help="History CSV path (<output>.history.csv)")
    parser.add_argument("--compact-ids", action="store_true", help="Renumber sparse node ids of the target")
    parser.set_defaults(handler=run)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Defaults < --config file < explicit flags."""
    base = RunConfig.load(args.config) if args.config else RunConfig()
    overrides: Dict[str, Any] = {
        name: getattr(args, name)
        for name in (
            "population_size",
            "generations",
            "p_crossover",
            "p_mutation",
            "tournament_size",
            "gene_mutation_rate",
            "elitism_count",
            "eval_size",
            "fitness_replicates",
            "validation_replicates",
            "validation_candidates",
            "seed",
            "threads",
            "desired_nodes",
            "output_path",
            "history_path",
        )
    }
    overrides["target_path"] = args.target
    if args.weights:
        try:
            weights = MetricWeights.parse_csv(args.weights)
        except ValueError as exc:
            raise ConfigError(f"invalid --weights: {exc}") from None
        overrides.update(weights.model_dump())
    return base.merged(overrides)


def history_frame(result: GaResult) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "generation": record.generation,
                "best_fitness": record.best_fitness,
                "mean_fitness": record.mean_fitness,
                "failed_evaluations": record.failed_evaluations,
            }
            for record in result.history
        ],
        columns=HISTORY_COLUMNS,
    )


def default_history_path(output_path: str) -> str:
    path = Path(output_path)
    return str(path.with_name(f"{path.stem}.history.csv"))


def run(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    if not config.target_path:
        raise ConfigError("no target graph given (positional argument or target_path)")
    output_path: str = config.output_path or DEFAULT_OUTPUT
    history_path: Optional[str] = config.history_path or default_history_path(output_path)

    seed = resolve_seed(config.seed)
    config = config.merged({"seed": seed})
    ga_config = config.to_ga_config()
    threads = config.threads or get_settings().threads

    target = load_graph(config.target_path, compact=args.compact_ids)
    desired_nodes = config.desired_nodes or target.node_count

    result = run_ga(target, desired_nodes, ga_config, weights=config.weights(), threads=threads)
    document = ModelDocument.from_result(
        result,
        target_sha256=file_sha256(config.target_path),
        target_nodes=target.node_count,
        target_edges=target.edge_count,
        cfg=ga_config,
        tool_version=__version__,
    )

    with OutputSet() as outputs:
        outputs.write(output_path, document.dumps())
        outputs.write(history_path, to_csv(history_frame(result)))

    logger.info(
        "fit_complete",
        output=output_path,
        history=history_path,
        best_fitness=result.best_fitness,
        seed=seed,
    )
    print(f"best fitness {result.best_fitness:.6g}; model written to {output_path}")
    return 0
