"""analyze: transfer and periodicity verdicts for a walk"""

import argparse
from typing import TYPE_CHECKING

from qwalk import __version__
from qwalk.cli.common import (
    add_decision_flags,
    add_walk_flag,
    build_walk,
    decision_options,
    emit,
    load_input,
    parse_pairs,
    to_csv,
)
from qwalk.core.config import settings
from qwalk.core.logging import bind_run_context, get_logger
from qwalk.models.spectral import SpectralData
from qwalk.models.verdict import DecisionOptions, TransferVerdict
from qwalk.models.walk import WalkKind
from qwalk.schemas import OracleReport, ReportSchema, SpectrumSchema, VerdictSchema
from qwalk.services.spectral import spectral_data
from qwalk.services.transfer_service import TransferService
from qwalk.utils.files import dump_model

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers

logger = get_logger(__name__)

CSV_FIELDS = ("u", "v", "kind", "tau", "gamma", "amount", "grade", "reason", "oracle_ok")


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("analyze", help="Decide state transfer and periodicity")
    parser.add_argument("input", help="Input JSON file, or - for stdin")
    add_walk_flag(parser)
    parser.add_argument(
        "--pairs",
        nargs="+",
        default=None,
        metavar="PAIR",
        help="'all' or pairs u,v (default: all, unless only --periodicity is given)",
    )
    parser.add_argument("--periodicity", action="store_true", help="Add a periodicity verdict per vertex")
    parser.add_argument("--csv", action="store_true", help="One verdict per row instead of a JSON report")
    parser.add_argument("--idempotents", action="store_true", help="Include idempotent matrices in the report")
    parser.add_argument("-o", "--output", default=None, help="Write to this file instead of stdout")
    add_decision_flags(parser)
    parser.set_defaults(handler=run)


def build_report(
    digest: str,
    kind: WalkKind,
    spec: SpectralData,
    verdicts: list[TransferVerdict],
    options: DecisionOptions,
    include_idempotents: bool = False,
) -> ReportSchema:
    """Report body; no timestamps, so reruns give identical output"""
    return ReportSchema(
        tool=settings.APP_NAME,
        version=__version__,
        input_digest=digest,
        walk=kind.value,
        tolerances={
            "cosine": options.cosine_tol,
            "support": options.support_tol,
            "cluster": options.cluster_tol,
            "oracle": options.oracle_tol,
        },
        q_max=options.resolve_q_max(spec.dim),
        spectrum=SpectrumSchema.from_domain(spec, include_idempotents=include_idempotents),
        verdicts=[VerdictSchema.from_domain(verdict) for verdict in verdicts],
        oracle=OracleReport.from_verdicts(verdicts),
    )


def run(args: argparse.Namespace) -> int:
    loaded = load_input(args.input)
    kind = WalkKind(args.walk)
    bind_run_context(command="analyze", input_digest=loaded.digest[:12], walk=kind.value)
    walk = build_walk(loaded.document, kind)
    options = decision_options(args)

    spec = spectral_data(walk, exact=options.exact, cluster_tol=options.cluster_tol)
    service = TransferService(options, walk=walk)

    if args.pairs is not None:
        pairs = parse_pairs(args.pairs, walk.dim)
    elif args.periodicity:
        pairs = []
    else:
        pairs = parse_pairs(["all"], walk.dim)
    vertices = list(range(walk.dim)) if args.periodicity else []

    verdicts = service.decide_all(spec, pairs, vertices=vertices, jobs=args.jobs)
    report = build_report(loaded.digest, kind, spec, verdicts, options, args.idempotents)
    logger.info(
        "Analysis finished",
        walk=kind.value,
        eigenvalues=len(spec),
        verdicts=len(verdicts),
        oracle_failures=report.oracle.failed,
    )

    if args.csv:
        emit(to_csv([verdict.csv_row() for verdict in report.verdicts], CSV_FIELDS), args.output)
    else:
        emit(dump_model(report), args.output)
    return 0
