"""evolve: amplitudes of U^t applied to a vertex star"""

import argparse
import sys
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np

from qwalk.cli.common import add_walk_flag, build_walk, emit, load_input, to_csv
from qwalk.core.exceptions import ParameterError
from qwalk.core.logging import get_logger
from qwalk.models.walk import WalkKind
from qwalk.services.walks import evolve_states, fidelity_profile, star_state
from qwalk.utils.rendering import write_frames

if TYPE_CHECKING:
    from qwalk.cli.common import Subparsers

logger = get_logger(__name__)


def register(subparsers: "Subparsers") -> None:
    parser = subparsers.add_parser("evolve", help="Time evolution from a vertex star, as CSV")
    parser.add_argument("input", help="Input JSON file, or - for stdin")
    add_walk_flag(parser)
    parser.add_argument("--start", type=int, required=True, help="Start vertex u; the initial state is N e_u")
    parser.add_argument("--t-max", type=int, default=10, help="Last time step (default: 10)")
    parser.add_argument(
        "--target", type=int, default=None, help="Report the fidelity gap minimiser for this vertex"
    )
    parser.add_argument("--gamma", type=int, choices=(1, -1), default=1, help="Phase for --target")
    parser.add_argument("--frames", default=None, metavar="DIR", help="Write one SVG frame per step")
    parser.add_argument("-o", "--output", default=None, help="Write the CSV to this file instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    walk = build_walk(load_input(args.input).document, WalkKind(args.walk))
    for name, vertex in (("start", args.start), ("target", args.target)):
        if vertex is not None and not 0 <= vertex < walk.dim:
            raise ParameterError(f"Invalid {name} vertex", vertex=vertex, dim=walk.dim)

    states = evolve_states(walk, star_state(walk, args.start), args.t_max)
    rows = [
        {"t": t, "state": index, "amplitude": f"{amplitude:.12g}"}
        for t, state in enumerate(states)
        for index, amplitude in enumerate(state)
    ]
    emit(to_csv(rows, ("t", "state", "amplitude")), args.output)

    if args.target is not None:
        profile = fidelity_profile(walk, args.start, args.target, args.t_max, args.gamma)
        best = int(np.argmin(profile))
        sys.stderr.write(f"fidelity gap to {args.target} is smallest at t={best}: {profile[best]:.12g}\n")

    if args.frames:
        paths = write_frames(walk, states, Path(args.frames))
        logger.info("Wrote frames", directory=args.frames, frames=len(paths))
    return 0
