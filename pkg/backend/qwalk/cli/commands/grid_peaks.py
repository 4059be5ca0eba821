"""grid-peaks: predicted (4, n) grid peaks, confirmed by the decision engine"""

import argparse
from typing import TYPE_CHECKING

from qwalk.cli.common import add_decision_flags, decision_options, emit
from qwalk.core.exceptions import TransferInvariantError
from qwalk.services.analyzers import grid_peak_suite

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("grid-peaks", help="Peaks from (0, 0) in the (4, n) toroidal grid")
    parser.add_argument("n", type=int)
    add_decision_flags(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    suite = grid_peak_suite(args.n, options=decision_options(args))
    lines = []
    for case in suite.cases:
        observed = case.verdict.kind.value if case.verdict is not None else "-"
        status = "confirmed" if case.confirmed else "NOT confirmed"
        lines.append(
            f"case ({case.case}): {case.source} -> {case.target} at t={case.time}: {observed}, {status}"
        )
    emit("\n".join(lines) + "\n", None)

    if not suite.all_confirmed:
        failed = [case.target for case in suite.cases if not case.confirmed]
        raise TransferInvariantError("Predicted grid peaks were not confirmed", n=args.n, targets=failed)
    return 0
