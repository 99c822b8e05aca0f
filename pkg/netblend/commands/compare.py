"""``netblend compare``: per-metric errors between two graphs."""
import argparse
from pathlib import Path
from typing import Optional, Tuple

from netblend.commands.common import OutputSet, resolve_seed
from netblend.services.graph_io import load_graph
from netblend.services.reporting import compare_graphs, compare_json, histogram_frame, to_csv

DEFAULT_OUTPUT = "compare.csv"


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("compare", help="Compare two graphs metric by metric")
    parser.add_argument("graph_a", help="Reference (target) edge list")
    parser.add_argument("graph_b", help="Compared (synthesized) edge list")
    parser.add_argument("--seed", type=int, help="Community-detection seed")
    parser.add_argument(
        "-o", "--output", default=DEFAULT_OUTPUT,
        help=f"Report CSV path ({DEFAULT_OUTPUT}); '-' streams the CSV to stdout",
    )
    parser.add_argument("--json", dest="json_path", help="Report JSON path (<output>.json)")
    parser.add_argument("--histogram", dest="histogram_path", help="Degree histogram CSV path (<output>.histogram.csv)")
    parser.add_argument("--compact-ids", action="store_true", help="Renumber sparse node ids")
    parser.set_defaults(handler=run)


def companion_paths(output: str) -> Tuple[Optional[str], Optional[str]]:
    """JSON and histogram paths next to a CSV report; none when the CSV goes to stdout."""
    if output == "-":
        return None, None
    path = Path(output)
    return str(path.with_suffix(".json")), str(path.with_name(f"{path.stem}.histogram.csv"))


def run(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    graph_a = load_graph(args.graph_a, compact=args.compact_ids)
    graph_b = load_graph(args.graph_b, compact=args.compact_ids)
    frame = compare_graphs(graph_a, graph_b, seed)
    json_default, histogram_default = companion_paths(args.output)
    json_path = args.json_path or json_default
    histogram_path = args.histogram_path or histogram_default

    with OutputSet() as outputs:
        outputs.write(args.output, to_csv(frame))
        if json_path:
            outputs.write(json_path, compare_json(frame))
        if histogram_path:
            outputs.write(histogram_path, to_csv(histogram_frame(graph_a, graph_b)))
    return 0
