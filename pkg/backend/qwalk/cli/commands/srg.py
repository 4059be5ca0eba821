"""srg: peak state transfer from strongly regular graph parameters"""

import argparse
from typing import TYPE_CHECKING

from qwalk.cli.common import add_decision_flags, decision_options, emit, input_graph, load_input
from qwalk.models.params import SrgParams
from qwalk.services.analyzers import srg_analyze

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("srg", help="Decide peak transfer for SRG parameters (n, k, a, c)")
    for name in ("n", "k", "a", "c"):
        parser.add_argument(name, type=int)
    parser.add_argument("--instance", default=None, help="Graph JSON with these parameters to cross-check")
    parser.add_argument("--explain", action="store_true", help="Print the reasoning steps")
    add_decision_flags(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = SrgParams(n=args.n, k=args.k, a=args.a, c=args.c)
    instance = input_graph(load_input(args.instance).document) if args.instance else None
    verdict = srg_analyze(params, instance=instance, options=decision_options(args))

    lines = [verdict.summary()]
    if args.explain:
        lines.extend(f"  {step}" for step in verdict.reasoning)
    elif verdict.instance_agrees is not None:
        lines.append(f"  instance {'agrees' if verdict.instance_agrees else 'disagrees'}")
    emit("\n".join(lines) + "\n", None)
    return 0
