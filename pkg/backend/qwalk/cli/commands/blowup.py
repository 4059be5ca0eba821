"""blowup: predictions for G[complement of K_m] checked against the blown-up graph"""

import argparse
from typing import TYPE_CHECKING

from qwalk.cli.common import (
    add_decision_flags,
    decision_options,
    emit,
    input_graph,
    load_input,
    parse_pairs,
)
from qwalk.core.exceptions import TransferInvariantError
from qwalk.models.analysis import BlowupPrediction
from qwalk.services.analyzers import blowup_check

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("blowup", help="Predict and check transfer in a coclique blow-up")
    parser.add_argument("input", help="Base graph JSON file, or - for stdin")
    parser.add_argument("m", type=int, help="Coclique size")
    parser.add_argument(
        "--pairs", nargs="+", default=None, metavar="PAIR", help="'all' or pairs u,v of the base"
    )
    add_decision_flags(parser)
    parser.set_defaults(handler=run)


def _describe(prediction: BlowupPrediction) -> str:
    head = f"({prediction.u},{prediction.a}) -> ({prediction.v},{prediction.b})"
    predicted = prediction.kind.value + (f"{{{prediction.tau}}}" if prediction.tau is not None else "")
    observed = "-"
    if prediction.observed is not None:
        tau = prediction.observed.tau
        observed = prediction.observed.kind.value + (f"{{{tau}}}" if tau is not None else "")
    status = "agrees" if prediction.agrees else "DISAGREES"
    return f"{head}: predicted {predicted}, observed {observed}, {status}"


def run(args: argparse.Namespace) -> int:
    base = input_graph(load_input(args.input).document)
    pairs = parse_pairs(args.pairs, base.n_vertices) if args.pairs else None
    predictions = blowup_check(base, args.m, pairs=pairs, options=decision_options(args))
    emit("\n".join(_describe(prediction) for prediction in predictions) + "\n", None)

    disagreeing = [prediction for prediction in predictions if not prediction.agrees]
    if disagreeing:
        raise TransferInvariantError(
            "Blow-up predictions disagree with the blown-up graph", count=len(disagreeing)
        )
    return 0
