"""``netblend generate``: synthesize a graph of any size from a fitted model."""
import argparse

import numpy as np

from netblend.commands.common import OutputSet, resolve_seed
from netblend.models.documents import ModelDocument
from netblend.services.graph_io import write_edge_list
from netblend.services.processes import synthesize_traced
from netblend.utils.logging import cli_logger as logger
from netblend.utils.metrics import MetricsCollector


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("generate", help="Synthesize a graph from a model document")
    parser.add_argument("model", help="Model JSON written by fit")
    parser.add_argument("-n", "--nodes", type=int, help="Node count (the target's size by default)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("-o", "--output", required=True, help="Edge-list path, or - for stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    document = ModelDocument.load(args.model)
    mixture = document.to_mixture_config()
    nodes = args.nodes or document.provenance.target_nodes
    seed = resolve_seed(args.seed)

    graph, trace = synthesize_traced(mixture, nodes, np.random.default_rng(seed))
    MetricsCollector.record_synthesis(trace.process_counts, trace.adm_commits)

    with OutputSet() as outputs:
        outputs.write(args.output, write_edge_list(graph) + "\n")
    logger.info("generate_complete", nodes=graph.node_count, edges=graph.edge_count, seed=seed)
    return 0
