"""Shared CLI plumbing: input loading, walk selection, decision flags and output"""

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

from qwalk.core.exceptions import InputParseError, UnsupportedError
from qwalk.models.graph import MultiGraph
from qwalk.models.verdict import DecisionOptions, GammaPolicy
from qwalk.models.walk import TwoReflectionWalk, WalkKind
from qwalk.schemas import (
    DesignSchema,
    EmbeddingSchema,
    FramesSchema,
    GraphSchema,
    InputDocument,
    SzegedySchema,
    parse_document,
)
from qwalk.services.families import generate
from qwalk.services.walks import arc_reversal_walk, vertex_face_walk
from qwalk.utils.files import atomic_write_text, canonical_digest

if TYPE_CHECKING:
    Subparsers = argparse._SubParsersAction[argparse.ArgumentParser]


@dataclass(frozen=True)
class LoadedInput:
    document: InputDocument
    digest: str


def read_text(source: str) -> str:
    """Contents of a file, or of stdin for '-'"""
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InputParseError("Cannot read input", path=source, reason=e.strerror) from e


def load_input(source: str) -> LoadedInput:
    text = read_text(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError("Input is not valid JSON", line=e.lineno, column=e.colno) from e
    return LoadedInput(document=parse_document(data), digest=canonical_digest(data))


def input_graph(document: InputDocument) -> MultiGraph:
    """Underlying multigraph of any graph-like document"""
    match document:
        case GraphSchema():
            return document.to_domain()
        case EmbeddingSchema():
            return document.graph.to_domain()
        case DesignSchema():
            return document.incidence_graph()
        case FramesSchema() | SzegedySchema():
            raise UnsupportedError("Input does not describe a graph", kind=document.kind)
        case _:
            return generate(document)


def build_walk(document: InputDocument, kind: WalkKind) -> TwoReflectionWalk:
    """
    Construct the requested walk from an input document.

    Raises:
        UnsupportedError: the walk kind does not apply to this kind of input
    """
    if kind == WalkKind.ARC_REVERSAL:
        return arc_reversal_walk(input_graph(document))
    if kind == WalkKind.VERTEX_FACE and isinstance(document, EmbeddingSchema):
        return vertex_face_walk(document.to_domain())
    if kind == WalkKind.GENERIC and isinstance(document, FramesSchema):
        return document.to_domain()
    if kind == WalkKind.SZEGEDY and isinstance(document, SzegedySchema):
        return document.to_domain()
    raise UnsupportedError("Walk kind does not apply to this input", walk=kind.value, kind=document.kind)


def add_walk_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--walk",
        choices=[kind.value for kind in WalkKind],
        default=WalkKind.ARC_REVERSAL.value,
        help="Walk to build from the input (default: arc-reversal)",
    )


def add_decision_flags(parser: argparse.ArgumentParser) -> None:
    """Tolerance and policy flags shared by the analysis commands"""
    group = parser.add_argument_group("decision options")
    group.add_argument("--q-max", type=int, default=None, help="Largest denominator q searched")
    group.add_argument("--tol", type=float, default=None, help="Cosine and support tolerance")
    group.add_argument("--cluster-tol", type=float, default=None, help="Eigenvalue clustering tolerance")
    group.add_argument(
        "--exact",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Certify cosines with the exact characteristic polynomial",
    )
    group.add_argument("--oracle", action="store_true", help="Cross-check verdicts against dense U^t")
    group.add_argument("--gamma", choices=[policy.value for policy in GammaPolicy], default="auto")
    group.add_argument("--jobs", type=int, default=None, help="Worker threads for the pair loop")


def decision_options(args: argparse.Namespace) -> DecisionOptions:
    return DecisionOptions.from_settings(
        q_max=args.q_max,
        cosine_tol=args.tol,
        support_tol=args.tol,
        cluster_tol=args.cluster_tol,
        gamma_policy=GammaPolicy(args.gamma),
        exact=args.exact,
        oracle=args.oracle,
    )


def parse_pairs(values: Sequence[str], dim: int) -> list[tuple[int, int]]:
    """'all' or a list of 'u,v' items"""
    if list(values) == ["all"]:
        return [(u, v) for u in range(dim) for v in range(u + 1, dim)]
    pairs = []
    for item in values:
        try:
            u, v = (int(part) for part in item.split(","))
        except ValueError as e:
            raise InputParseError("Pairs must be 'all' or items of the form u,v", item=item) from e
        pairs.append((u, v))
    return pairs


def to_csv(rows: Sequence[dict[str, Any]], fieldnames: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def emit(text: str, output: str | None) -> None:
    """Write to the output file atomically, or to stdout"""
    if output:
        atomic_write_text(Path(output), text)
    else:
        sys.stdout.write(text)
