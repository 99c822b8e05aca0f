"""``netblend summarize``: print the metric summary of one graph as JSON."""
import argparse

from netblend.commands.common import OutputSet, resolve_seed
from netblend.services.distance import summarize
from netblend.services.graph_io import load_graph


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("summarize", help="Summarize a graph's topology as JSON")
    parser.add_argument("graph", help="Edge-list file")
    parser.add_argument("--seed", type=int, help="Community-detection seed")
    parser.add_argument("--no-properties", action="store_true", help="Skip node-property samples")
    parser.add_argument("-o", "--output", default="-")
    parser.add_argument("--compact-ids", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    graph = load_graph(args.graph, compact=args.compact_ids)
    summary = summarize(graph, seed, include_properties=not args.no_properties)
    with OutputSet() as outputs:
        outputs.write(args.output, summary.model_dump_json(indent=2) + "\n")
    return 0
