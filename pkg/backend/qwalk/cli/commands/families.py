"""families: write graph, embedding and design documents"""

import argparse
import json
from collections.abc import Callable
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel

from qwalk.cli.common import emit, read_text
from qwalk.core.exceptions import InputParseError
from qwalk.core.logging import get_logger
from qwalk.schemas import DesignSchema, EmbeddingSchema, GraphSchema, parse_family
from qwalk.services.embeddings import cycle_on_sphere, k4_planar, k4_torus, toroidal_grid
from qwalk.services.families import DESIGN_9_3_2_BLOCKS, affine_plane_blocks, generate
from qwalk.utils.files import dump_model

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers

logger = get_logger(__name__)

Producer = Callable[[argparse.Namespace], BaseModel]


def _family(kind: str, *fields: str) -> Producer:
    """Producer generating a graph from CLI arguments named like the family fields"""

    def produce(args: argparse.Namespace) -> BaseModel:
        values: dict[str, Any] = {"kind": kind, **{name: getattr(args, name) for name in fields}}
        return GraphSchema.from_domain(generate(parse_family(values)))

    return produce


def _from_spec_file(args: argparse.Namespace) -> BaseModel:
    try:
        data = json.loads(read_text(args.file))
    except json.JSONDecodeError as e:
        raise InputParseError("Family file is not valid JSON", line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise InputParseError("Family file must hold a JSON object")
    return GraphSchema.from_domain(generate(parse_family(data)))


def _grid(args: argparse.Namespace) -> BaseModel:
    return EmbeddingSchema.from_domain(toroidal_grid(args.n, args.m))


def _cycle_sphere(args: argparse.Namespace) -> BaseModel:
    return EmbeddingSchema.from_domain(cycle_on_sphere(args.n))


def _affine_plane(args: argparse.Namespace) -> BaseModel:
    return DesignSchema(v=args.order**2, blocks=affine_plane_blocks(args.order))


def _design_9_3_2(args: argparse.Namespace) -> BaseModel:
    return DesignSchema(v=9, blocks=[list(block) for block in DESIGN_9_3_2_BLOCKS])


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("families", help="Write a bundled family as a JSON document")
    kinds = parser.add_subparsers(dest="family", required=True)

    def add(name: str, produce: Producer, help_text: str, *ints: str) -> argparse.ArgumentParser:
        sub = kinds.add_parser(name, help=help_text)
        for field in ints:
            sub.add_argument(field, type=int)
        sub.add_argument("-o", "--output", default=None, help="Write to this file instead of stdout")
        sub.set_defaults(handler=run, produce=produce)
        return sub

    # Graphs
    add("cycle", _family("cycle", "n"), "Cycle C_n", "n")
    add("complete", _family("complete", "n"), "Complete graph K_n", "n")
    add("path", _family("path", "n"), "Path on n vertices", "n")
    multipartite = add(
        "complete-multipartite",
        _family("complete_multipartite", "parts"),
        "Complete multipartite graph with the given part sizes",
    )
    multipartite.add_argument("parts", type=int, nargs="+")
    add("gnm", _family("gnm", "n", "m"), "Five-layer graph u - n - v - m - w", "n", "m")
    add("hamming-h33", _family("hamming_h33"), "Hamming graph H(3,3)")
    add("folded-cube", _family("folded_cube", "d"), "Folded d-cube", "d")
    add("twin-apex", _family("twin_apex"), "Seven-vertex graph with a peak at time 6")
    add("petersen", _family("petersen"), "Petersen graph")
    add("paley", _family("paley", "q"), "Paley graph of prime order q = 1 mod 4", "q")
    spec = add("spec", _from_spec_file, "Any family document, e.g. blowup or disjoint_union")
    spec.add_argument("file", help="Family JSON file, or - for stdin")

    # Embeddings
    add("grid", _grid, "C_n x C_m in the torus", "n", "m")
    add("k4-torus", lambda args: EmbeddingSchema.from_domain(k4_torus()), "K_4 in the torus, faces 4 and 8")
    add("k4-planar", lambda args: EmbeddingSchema.from_domain(k4_planar()), "Planar K_4")
    add("cycle-sphere", _cycle_sphere, "C_n in the sphere", "n")

    # Designs
    affine = add("affine-plane", _affine_plane, "Affine plane AG(2, q) for prime q")
    affine.add_argument("order", type=int, nargs="?", default=3)
    add("design-9-3-2", _design_9_3_2, "A 2-(9,3,2) design with 24 blocks")


def run(args: argparse.Namespace) -> int:
    document = args.produce(args)
    emit(dump_model(document), args.output)
    logger.info("Wrote family", family=args.family, output=args.output or "stdout")
    return 0
