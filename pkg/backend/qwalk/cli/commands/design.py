"""design: peak state transfer from the points of a 2-design"""

import argparse
from typing import TYPE_CHECKING

from qwalk.cli.common import add_decision_flags, decision_options, emit, load_input
from qwalk.core.exceptions import InputParseError
from qwalk.schemas import DesignSchema
from qwalk.services.analyzers import design_analyze

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("design", help="Decide point-started peak transfer in a 2-design")
    parser.add_argument("input", help="Design JSON file ({\"kind\": \"design\", \"v\": ..., \"blocks\": ...})")
    parser.add_argument(
        "--params-only",
        action="store_true",
        help="Decide from the parameters without building the incidence graph",
    )
    parser.add_argument("--explain", action="store_true", help="Print the reasoning steps")
    add_decision_flags(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    document = load_input(args.input).document
    if not isinstance(document, DesignSchema):
        raise InputParseError("Expected a design document", kind=document.kind)

    params = document.to_domain()
    blocks = None if args.params_only else document.blocks
    verdict = design_analyze(params, blocks=blocks, options=decision_options(args))

    lines = [verdict.summary()]
    if args.explain:
        lines.extend(f"  {step}" for step in verdict.reasoning)
    emit("\n".join(lines) + "\n", None)
    return 0
