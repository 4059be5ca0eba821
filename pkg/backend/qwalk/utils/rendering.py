"""SVG frames of arc amplitudes"""

import io
import math
from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "qwalk"

import numpy as np  # noqa: E402
import numpy.typing as npt  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from qwalk.core.exceptions import UnsupportedError  # noqa: E402
from qwalk.models.embedding import Layout  # noqa: E402
from qwalk.models.walk import TwoReflectionWalk  # noqa: E402
from qwalk.utils.files import atomic_write_bytes  # noqa: E402

POSITIVE_COLOR = "#d62728"
NEGATIVE_COLOR = "#1f77b4"

_STUB_FRACTION = 0.42
_LOOP_STUB = 0.3


def walk_layout(walk: TwoReflectionWalk) -> Layout:
    if walk.embedding is not None and walk.embedding.layout is not None:
        return walk.embedding.layout
    if walk.graph is None:
        raise UnsupportedError("Frames need a walk on the arcs of a graph", walk=walk.kind.value)
    return Layout.circular(walk.graph.n_vertices)


def arc_segments(
    walk: TwoReflectionWalk, layout: Layout
) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """
    Half-edge stub for every arc, drawn from its tail.

    Stubs follow the layout's arc directions when present, otherwise they
    point at the head vertex. Loops without a direction fan out by arc index.
    """
    if walk.arcs is None:
        raise UnsupportedError("Frames need a walk on the arcs of a graph", walk=walk.kind.value)
    arcs = walk.arcs
    segments = []
    for arc in range(len(arcs)):
        x0, y0 = layout.vertices[arcs.tails[arc]]
        if layout.arc_directions is not None:
            dx, dy = layout.arc_directions[arc]
            length = _STUB_FRACTION
        elif arcs.heads[arc] != arcs.tails[arc]:
            x1, y1 = layout.vertices[arcs.heads[arc]]
            dx, dy = x1 - x0, y1 - y0
            length = _STUB_FRACTION * math.hypot(dx, dy)
        else:
            angle = 2 * math.pi * arc / len(arcs)
            dx, dy = math.cos(angle), math.sin(angle)
            length = _LOOP_STUB
        norm = math.hypot(dx, dy) or 1.0
        segments.append(((x0, y0), (x0 + length * dx / norm, y0 + length * dy / norm)))
    return segments


def render_frame(
    walk: TwoReflectionWalk,
    amplitudes: Sequence[float] | npt.NDArray[np.float64],
    title: str | None = None,
    layout: Layout | None = None,
) -> bytes:
    """
    Draw one state as SVG.

    Positive amplitudes are red, negative ones blue, and opacity is
    proportional to |amplitude| relative to the largest entry.

    Returns:
        SVG document; no date metadata, so equal states give equal bytes
    """
    layout = layout if layout is not None else walk_layout(walk)
    values = np.asarray(amplitudes, dtype=float)
    scale = float(np.max(np.abs(values))) if values.size else 0.0

    fig = Figure(figsize=(5, 5))
    ax = fig.add_subplot()
    for (start, end), value in zip(arc_segments(walk, layout), values, strict=True):
        if scale == 0.0 or abs(value) < 1e-12:
            ax.plot(*zip(start, end, strict=True), color="#bbbbbb", linewidth=0.8)
            continue
        ax.plot(
            *zip(start, end, strict=True),
            color=POSITIVE_COLOR if value > 0 else NEGATIVE_COLOR,
            alpha=min(1.0, abs(value) / scale),
            linewidth=3.0,
            solid_capstyle="round",
        )
    xs, ys = zip(*layout.vertices, strict=True)
    ax.scatter(xs, ys, s=18, color="black", zorder=3)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_axis_off()

    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def write_frames(
    walk: TwoReflectionWalk, states: Sequence[npt.NDArray[np.float64]], directory: Path
) -> list[Path]:
    """frame_0000.svg, frame_0001.svg, ... one per time step"""
    layout = walk_layout(walk)
    paths = []
    for t, state in enumerate(states):
        path = directory / f"frame_{t:04d}.svg"
        atomic_write_bytes(path, render_frame(walk, state, title=f"t = {t}", layout=layout))
        paths.append(path)
    return paths
