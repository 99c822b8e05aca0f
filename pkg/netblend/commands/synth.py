"""``netblend synth``: write a BA, ER or WS baseline graph."""
import argparse

import numpy as np

from netblend.commands.common import OutputSet, resolve_seed
from netblend.models.baseline import BaselineModel, BaselineSpec
from netblend.services.baselines import generate
from netblend.services.graph_io import write_edge_list


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("synth", help="Generate a classical baseline graph")
    parser.add_argument("model", choices=[m.value for m in BaselineModel], type=str.lower)
    parser.add_argument("-n", "--nodes", type=int, required=True)
    parser.add_argument("-m", type=int, help="BA links per newcomer")
    parser.add_argument("-p", type=float, help="ER link probability or WS rewiring probability")
    parser.add_argument("-K", "-k", dest="k", type=int, help="WS lattice degree")
    parser.add_argument("--seed", type=int)
    parser.add_argument("-o", "--output", default="-", help="Edge-list path (stdout by default)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    spec = BaselineSpec(model=args.model, n=args.nodes, m=args.m, p=args.p, k=args.k, seed=seed)
    graph = generate(spec, np.random.default_rng(seed))
    with OutputSet() as outputs:
        outputs.write(args.output, write_edge_list(graph) + "\n")
    return 0
