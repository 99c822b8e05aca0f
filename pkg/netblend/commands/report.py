"""``netblend report``: averaged errors of a fitted model over several syntheses."""
import argparse

from netblend.commands.common import OutputSet, resolve_seed
from netblend.models.documents import ModelDocument
from netblend.services.graph_io import load_graph
from netblend.services.reporting import replicate_report, to_csv
from netblend.utils.errors import GraphArgumentError

DEFAULT_REPLICATES = 5


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("report", help="Mean and spread of per-metric errors of a model")
    parser.add_argument("target", help="Target edge list")
    parser.add_argument("model", help="Model JSON written by fit")
    parser.add_argument("--replicates", type=int, default=DEFAULT_REPLICATES)
    parser.add_argument("-n", "--nodes", type=int, help="Synthesis size (target size by default)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("-o", "--output", default="-", help="Report CSV path (stdout by default)")
    parser.add_argument("--compact-ids", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.replicates < 1:
        raise GraphArgumentError(f"--replicates must be at least 1, got {args.replicates}")
    seed = resolve_seed(args.seed)
    target = load_graph(args.target, compact=args.compact_ids)
    document = ModelDocument.load(args.model)
    nodes = args.nodes or target.node_count

    frame = replicate_report(target, document.to_mixture_config(), nodes, args.replicates, seed)
    with OutputSet() as outputs:
        outputs.write(args.output, to_csv(frame))
    return 0
