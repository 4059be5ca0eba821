"""Rotation systems, face tracing and the toroidal grids"""

from collections import Counter
from collections.abc import Sequence
from itertools import permutations, product

from qwalk.core.exceptions import ParameterError, RotationError
from qwalk.core.logging import get_logger
from qwalk.models.embedding import Face, Layout, RotationMap
from qwalk.models.graph import ArcSpace, MultiGraph
from qwalk.services.families import complete, cycle
from qwalk.services.graphs import build_arc_space

logger = get_logger(__name__)

# Unit directions of the four arcs at a grid vertex, in rotation order
_GRID_DIRECTIONS = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))


def rotation_map(
    graph: MultiGraph,
    rotation: Sequence[Sequence[int]],
    layout: Layout | None = None,
    arcs: ArcSpace | None = None,
) -> RotationMap:
    """Untraced map from arc-index cycles, one per vertex"""
    arc_space = arcs if arcs is not None else build_arc_space(graph)
    if len(rotation) != graph.n_vertices:
        raise RotationError(
            "Need one rotation per vertex", rotations=len(rotation), vertices=graph.n_vertices
        )
    return RotationMap(
        graph=graph,
        arcs=arc_space,
        rotation=tuple(tuple(int(a) for a in cyc) for cyc in rotation),
        layout=layout,
    )


def _check_rotation(rotation: RotationMap) -> None:
    for vertex, cyc in enumerate(rotation.rotation):
        expected = Counter(rotation.arcs.out_arcs[vertex])
        seen = Counter(cyc)
        if seen != expected:
            missing = sorted((expected - seen).elements())
            extra = sorted((seen - expected).elements())
            raise RotationError(
                "Rotation must list each outgoing arc exactly once",
                vertex=vertex,
                missing=missing,
                unexpected=extra,
            )


def trace_faces(rotation: RotationMap) -> RotationMap:
    """
    Trace the faces of a rotation system.

    The arc following a in its face is the rotation-successor of reversal(a)
    at the head of a. Faces are discovered from the lowest unvisited arc, so
    the result is deterministic, and any faces already present are discarded.

    Raises:
        RotationError: an outgoing arc is missing or duplicated, or the Euler
            characteristic gives a non-integral genus
    """
    _check_rotation(rotation)
    arcs = rotation.arcs
    successor = [0] * len(arcs)
    for cyc in rotation.rotation:
        for position, arc in enumerate(cyc):
            successor[arc] = cyc[(position + 1) % len(cyc)]

    visited = [False] * len(arcs)
    faces: list[Face] = []
    for start in range(len(arcs)):
        if visited[start]:
            continue
        walk = []
        arc = start
        while not visited[arc]:
            visited[arc] = True
            walk.append(arc)
            arc = successor[arcs.reversal[arc]]
        faces.append(Face(arcs=tuple(walk)))

    traced = RotationMap(
        graph=rotation.graph,
        arcs=arcs,
        rotation=rotation.rotation,
        faces=tuple(faces),
        layout=rotation.layout,
    )
    chi = traced.euler_characteristic
    if chi % 2 or chi > 2 * max(1, len(rotation.graph.components())):
        raise RotationError("Face count gives a non-integral genus", euler_characteristic=chi)
    logger.debug(
        "Traced faces",
        vertices=rotation.graph.n_vertices,
        faces=len(faces),
        genus=traced.genus,
    )
    return traced


def reverse_orientation(rotation: RotationMap) -> RotationMap:
    """Mirror image: every rotation cycle reversed"""
    mirrored = RotationMap(
        graph=rotation.graph,
        arcs=rotation.arcs,
        rotation=tuple(tuple(reversed(cyc)) for cyc in rotation.rotation),
        layout=rotation.layout,
    )
    return trace_faces(mirrored) if rotation.is_traced else mirrored


def grid_vertex(n: int, m: int, i: int, j: int) -> int:
    """Index of (i, j) in Z_n x Z_m"""
    return (i % n) * m + (j % m)


def toroidal_grid(n: int, m: int) -> RotationMap:
    """
    Embedding of C_n x C_m in the torus, traced.

    Edge e_h(i, j) joins (i, j) to (i+1, j) and e_v(i, j) joins (i, j) to
    (i, j+1). The rotation at every vertex is east, north, west, south, so
    for n or m in {1, 2} the same rule produces the loops and doubled edges.
    """
    if n < 1 or m < 1:
        raise ParameterError("Grid dimensions must be positive", n=n, m=m)

    grid_edges: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(m):
            grid_edges.append((grid_vertex(n, m, i, j), grid_vertex(n, m, i + 1, j)))
            grid_edges.append((grid_vertex(n, m, i, j), grid_vertex(n, m, i, j + 1)))

    graph = MultiGraph.from_pairs(n * m, grid_edges)
    arcs = build_arc_space(graph)

    # edge-instance ids for each canonical pair, handed out in grid order
    first_instance: dict[tuple[int, int], int] = {}
    for edge_id, pair in enumerate(graph.edge_instances):
        first_instance.setdefault(pair, edge_id)
    used: Counter[tuple[int, int]] = Counter()

    def forward_arc(tail: int, head: int) -> int:
        pair = (min(tail, head), max(tail, head))
        edge_id = first_instance[pair] + used[pair]
        used[pair] += 1
        low, high = arcs.arcs_of_edge(edge_id)
        return low if tail <= head else high

    east: dict[tuple[int, int], int] = {}
    north: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(m):
            east[(i, j)] = forward_arc(grid_vertex(n, m, i, j), grid_vertex(n, m, i + 1, j))
            north[(i, j)] = forward_arc(grid_vertex(n, m, i, j), grid_vertex(n, m, i, j + 1))

    rotation: list[tuple[int, ...]] = [()] * (n * m)
    for i in range(n):
        for j in range(m):
            west = arcs.reversal[east[((i - 1) % n, j)]]
            south = arcs.reversal[north[(i, (j - 1) % m)]]
            rotation[grid_vertex(n, m, i, j)] = (east[(i, j)], north[(i, j)], west, south)

    directions = [(0.0, 0.0)] * len(arcs)
    for cyc in rotation:
        for arc, direction in zip(cyc, _GRID_DIRECTIONS, strict=True):
            directions[arc] = direction
    layout = Layout(
        vertices=tuple((float(i), float(j)) for i in range(n) for j in range(m)),
        arc_directions=tuple(directions),
    )
    return trace_faces(rotation_map(graph, rotation, layout=layout, arcs=arcs))


def _local_rotations(out_arcs: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All cyclic orders of out_arcs, with the first arc fixed"""
    if len(out_arcs) <= 2:
        return [out_arcs]
    head, rest = out_arcs[0], out_arcs[1:]
    return [(head, *perm) for perm in permutations(rest)]


def search_rotation(
    graph: MultiGraph, face_degrees: Sequence[int], limit: int = 1_000_000
) -> RotationMap:
    """
    Find a rotation system whose faces have the given degree multiset.

    Exhaustive over local rotations, so only usable on small graphs.

    Raises:
        ParameterError: the search space exceeds limit, or no rotation matches
    """
    arcs = build_arc_space(graph)
    choices = [_local_rotations(arcs.out_arcs[v]) for v in range(graph.n_vertices)]
    size = 1
    for options in choices:
        size *= len(options)
    if size > limit:
        raise ParameterError("Rotation search space too large", size=size, limit=limit)

    target = sorted(face_degrees)
    for candidate in product(*choices):
        traced = trace_faces(rotation_map(graph, candidate, arcs=arcs))
        if sorted(traced.face_degrees) == target:
            return traced
    raise ParameterError("No rotation system with these face degrees", face_degrees=target)


def k4_planar() -> RotationMap:
    """Unique planar embedding of K_4: four triangles"""
    return _with_layout(search_rotation(complete(4), [3, 3, 3, 3]), Layout.circular(4))


def k4_torus() -> RotationMap:
    """K_4 in the torus with one quadrilateral and one octagonal face"""
    return _with_layout(search_rotation(complete(4), [4, 8]), Layout.circular(4))


def cycle_on_sphere(n: int) -> RotationMap:
    """C_n in the sphere: two faces of degree n"""
    graph = cycle(n)
    arcs = build_arc_space(graph)
    return trace_faces(
        rotation_map(
            graph,
            [arcs.out_arcs[v] for v in range(n)],
            layout=Layout.circular(n),
            arcs=arcs,
        )
    )


def _with_layout(rotation: RotationMap, layout: Layout) -> RotationMap:
    return RotationMap(
        graph=rotation.graph,
        arcs=rotation.arcs,
        rotation=rotation.rotation,
        faces=rotation.faces,
        layout=layout,
    )
