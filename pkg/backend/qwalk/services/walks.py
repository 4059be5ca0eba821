"""Walk constructions, time evolution and the Chebyshev/oracle identities"""

from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import numpy.typing as npt
import sympy

from qwalk.core.config import settings
from qwalk.core.exceptions import (
    ConstructionError,
    FrameError,
    ParameterError,
    UnsupportedError,
    UnsupportedExactError,
)
from qwalk.core.logging import get_logger
from qwalk.models.embedding import RotationMap
from qwalk.models.graph import MultiGraph
from qwalk.models.walk import FloatMatrix, ReflectionFrame, SignedSquares, TwoReflectionWalk, WalkKind
from qwalk.services.graphs import build_arc_space
from qwalk.utils.arithmetic import signed_square

logger = get_logger(__name__)

FloatVector = npt.NDArray[np.float64]

# Largest rows * cols^2 for which orthonormality is checked symbolically
_EXACT_FRAME_CHECK_LIMIT = 200_000


def arc_reversal_walk(graph: MultiGraph) -> TwoReflectionWalk:
    """Grover walk: N is the arc-vertex frame, 2MM^T - I is arc reversal"""
    if graph.n_vertices == 0:
        raise ConstructionError("Graph has no vertices")
    isolated = [v for v in range(graph.n_vertices) if graph.degree(v) == 0]
    if isolated:
        raise ConstructionError("Arc-reversal walk needs every vertex to have an arc", isolated=isolated)

    arcs = build_arc_space(graph)
    degrees = graph.degrees.astype(float)
    N = np.zeros((len(arcs), graph.n_vertices))
    M = np.zeros((len(arcs), graph.edge_count))
    for arc, (tail, edge_id) in enumerate(zip(arcs.tails, arcs.edge_ids, strict=True)):
        N[arc, tail] = 1.0 / np.sqrt(degrees[tail])
        M[arc, edge_id] = np.sqrt(0.5)

    logger.debug("Built arc-reversal walk", vertices=graph.n_vertices, arcs=len(arcs))
    return TwoReflectionWalk(
        kind=WalkKind.ARC_REVERSAL,
        N=ReflectionFrame(N),
        M=ReflectionFrame(M),
        graph=graph,
        arcs=arcs,
    )


def vertex_face_walk(embedding: RotationMap) -> TwoReflectionWalk:
    """N is the arc-vertex frame, M the arc-face frame of a traced map"""
    if not embedding.is_traced:
        raise ConstructionError("Vertex-face walk needs a traced rotation map")
    graph, arcs = embedding.graph, embedding.arcs
    isolated = [v for v in range(graph.n_vertices) if graph.degree(v) == 0]
    if isolated:
        raise ConstructionError("Vertex-face walk needs every vertex to have an arc", isolated=isolated)

    degrees = graph.degrees.astype(float)
    face_degrees = np.array(embedding.face_degrees, dtype=float)
    N = np.zeros((len(arcs), graph.n_vertices))
    M = np.zeros((len(arcs), embedding.face_count))
    for arc, (tail, face) in enumerate(zip(arcs.tails, embedding.arc_face, strict=True)):
        N[arc, tail] = 1.0 / np.sqrt(degrees[tail])
        M[arc, face] = 1.0 / np.sqrt(face_degrees[face])

    logger.debug(
        "Built vertex-face walk",
        vertices=graph.n_vertices,
        faces=embedding.face_count,
        genus=embedding.genus,
    )
    return TwoReflectionWalk(
        kind=WalkKind.VERTEX_FACE,
        N=ReflectionFrame(N),
        M=ReflectionFrame(M),
        graph=graph,
        embedding=embedding,
        arcs=arcs,
    )


def _stochastic(
    rows: Sequence[Sequence[float | Fraction]], width: int, name: str, tol: float
) -> list[list[Fraction | float]]:
    checked: list[list[Fraction | float]] = []
    for index, row in enumerate(rows):
        if len(row) != width:
            raise ConstructionError(
                f"{name} vectors have the wrong length", index=index, length=len(row), expected=width
            )
        if any(x < 0 for x in row):
            raise ConstructionError(f"{name} vectors must be nonnegative", index=index)
        if abs(float(sum(row)) - 1.0) > tol:
            raise ConstructionError(f"{name} vectors must sum to 1", index=index, total=float(sum(row)))
        checked.append(list(row))
    return checked


def szegedy_walk(
    p: Sequence[Sequence[float | Fraction]],
    q: Sequence[Sequence[float | Fraction]],
    tol: float = 1e-12,
) -> TwoReflectionWalk:
    """
    Szegedy walk on the X x Y basis.

    Args:
        p: For every y, a probability vector over X
        q: For every x, a probability vector over Y
    """
    size_x, size_y = len(q), len(p)
    if size_x == 0 or size_y == 0:
        raise ConstructionError("Szegedy walk needs nonempty X and Y")
    p_rows = _stochastic(p, size_x, "p", tol)
    q_rows = _stochastic(q, size_y, "q", tol)

    N = np.zeros((size_x * size_y, size_x))
    M = np.zeros((size_x * size_y, size_y))
    for x in range(size_x):
        for y in range(size_y):
            N[x * size_y + y, x] = np.sqrt(float(q_rows[x][y]))
            M[x * size_y + y, y] = np.sqrt(float(p_rows[y][x]))

    return TwoReflectionWalk(
        kind=WalkKind.SZEGEDY,
        N=_frame_with_squares(N),
        M=_frame_with_squares(M),
    )


def _frame_with_squares(matrix: FloatMatrix, tol: float = 1e-12) -> ReflectionFrame:
    squares: list[tuple[Fraction, ...]] = []
    for row in matrix:
        exact_row = [signed_square(float(x), tol) for x in row]
        if any(value is None for value in exact_row):
            return ReflectionFrame(matrix)
        squares.append(tuple(value for value in exact_row if value is not None))
    exact: SignedSquares = tuple(squares)
    return ReflectionFrame(matrix, signed_squares=exact)


def _check_orthonormal(frame: ReflectionFrame, name: str, tol: float) -> None:
    rows, cols = frame.shape
    if frame.has_exact and rows * cols * cols <= _EXACT_FRAME_CHECK_LIMIT:
        F = frame.exact_matrix()
        gram = (F.T * F - sympy.eye(cols)).applyfunc(sympy.expand)
        if not gram.is_zero_matrix:
            raise FrameError(f"Frame {name} columns are not orthonormal (exact check)")
        return
    gram_error = np.max(np.abs(frame.matrix.T @ frame.matrix - np.eye(cols))) if cols else 0.0
    if gram_error > tol:
        raise FrameError(f"Frame {name} columns are not orthonormal", error=float(gram_error), tol=tol)


def generic_walk(
    N: ReflectionFrame | FloatMatrix | Sequence[Sequence[float]],
    M: ReflectionFrame | FloatMatrix | Sequence[Sequence[float]],
    tol: float | None = None,
) -> TwoReflectionWalk:
    """Walk from arbitrary real frames sharing a row index set"""
    tol = settings.FRAME_TOL if tol is None else tol
    frames = []
    for name, frame in (("N", N), ("M", M)):
        if not isinstance(frame, ReflectionFrame):
            matrix = np.asarray(frame, dtype=float)
            if matrix.ndim != 2:
                raise FrameError(f"Frame {name} must be a matrix", ndim=int(matrix.ndim))
            frame = _frame_with_squares(matrix)
        frames.append(frame)
    frame_n, frame_m = frames

    if frame_n.shape[0] != frame_m.shape[0]:
        raise FrameError(
            "Frames must share the row index set", n_rows=frame_n.shape[0], m_rows=frame_m.shape[0]
        )
    _check_orthonormal(frame_n, "N", tol)
    _check_orthonormal(frame_m, "M", tol)
    return TwoReflectionWalk(kind=WalkKind.GENERIC, N=frame_n, M=frame_m)


def star_state(walk: TwoReflectionWalk, u: int) -> FloatVector:
    """N e_u"""
    return walk.N.matrix[:, u].copy()


def evolve(walk: TwoReflectionWalk, phi0: Sequence[float] | FloatVector, t: int) -> FloatVector:
    """U^t phi0"""
    return evolve_states(walk, phi0, t)[-1]


def evolve_states(
    walk: TwoReflectionWalk, phi0: Sequence[float] | FloatVector, t_max: int
) -> list[FloatVector]:
    """[phi0, U phi0, ..., U^t_max phi0]"""
    if t_max < 0:
        raise ParameterError("Time must be nonnegative", t=t_max)
    state = np.asarray(phi0, dtype=float)
    if state.shape != (walk.n_states,):
        raise ParameterError("State has the wrong length", length=int(state.size), expected=walk.n_states)
    if abs(np.linalg.norm(state) - 1.0) > 1e-8:
        raise ParameterError("Initial state must be a unit vector", norm=float(np.linalg.norm(state)))
    states = [state]
    for _ in range(t_max):
        state = walk.U @ state
        states.append(state)
    return states


def bt(walk: TwoReflectionWalk, t: int) -> FloatMatrix:
    """B_t = T_t(B) by the three-term recurrence"""
    if t < 0:
        raise ParameterError("Time must be nonnegative", t=t)
    B = walk.B
    previous, current = np.eye(walk.dim), B.copy()
    if t == 0:
        return previous
    for _ in range(t - 1):
        previous, current = current, 2.0 * B @ current - previous
    return current


def bt_columns(walk: TwoReflectionWalk, u: int, t_max: int) -> FloatMatrix:
    """Rows t = 0..t_max of B_t e_u, by the recurrence on vectors"""
    B = walk.B
    columns = np.zeros((t_max + 1, walk.dim))
    columns[0, u] = 1.0
    if t_max >= 1:
        columns[1] = B[:, u]
    for t in range(2, t_max + 1):
        columns[t] = 2.0 * B @ columns[t - 1] - columns[t - 2]
    return columns


def oracle_bt(walk: TwoReflectionWalk, t: int) -> FloatMatrix:
    """N^T U^t N from dense powers of U"""
    if walk.n_states > settings.DENSE_ORACLE_MAX_ARCS:
        raise UnsupportedError(
            "State space too large for the dense oracle",
            states=walk.n_states,
            limit=settings.DENSE_ORACLE_MAX_ARCS,
        )
    return walk.N.matrix.T @ np.linalg.matrix_power(walk.U, t) @ walk.N.matrix


def fidelity_gap(walk: TwoReflectionWalk, u: int, v: int, t: int, gamma: int = 1) -> float:
    """2 - 2*gamma*B_t(v, u), the squared distance of U^t N e_u from gamma N e_v"""
    if gamma not in (1, -1):
        raise ParameterError("gamma must be +1 or -1", gamma=gamma)
    return float(2.0 - 2.0 * gamma * bt_columns(walk, u, t)[t, v])


def fidelity_profile(walk: TwoReflectionWalk, u: int, v: int, t_max: int, gamma: int = 1) -> list[float]:
    """Fidelity gap at t = 0..t_max"""
    columns = bt_columns(walk, u, t_max)
    return [float(2.0 - 2.0 * gamma * columns[t, v]) for t in range(t_max + 1)]


def exact_projectors(walk: TwoReflectionWalk) -> tuple[sympy.SparseMatrix, sympy.SparseMatrix]:
    """
    Rational reflections 2NN^T - I and 2MM^T - I.

    Only arc-reversal and vertex-face walks have rational projectors here.
    """
    if walk.arcs is None or walk.graph is None:
        raise UnsupportedExactError("Walk has no arc structure", kind=walk.kind.value)
    arcs = walk.arcs
    size = len(arcs)

    def reflection(groups: list[list[int]]) -> sympy.SparseMatrix:
        entries: dict[tuple[int, int], sympy.Rational] = {}
        for group in groups:
            weight = sympy.Rational(2, len(group))
            for a in group:
                for b in group:
                    entries[(a, b)] = weight
        for a in range(size):
            entries[(a, a)] = entries.get((a, a), sympy.Integer(0)) - 1
        return sympy.SparseMatrix(size, size, entries)

    vertex_groups = [list(out) for out in arcs.out_arcs if out]
    if walk.kind == WalkKind.ARC_REVERSAL:
        second_groups = [[2 * e, 2 * e + 1] for e in range(walk.graph.edge_count)]
    elif walk.kind == WalkKind.VERTEX_FACE and walk.embedding is not None:
        second_groups = [list(face.arcs) for face in walk.embedding.faces or ()]
    else:
        raise UnsupportedExactError("No rational projectors for this walk", kind=walk.kind.value)
    return reflection(vertex_groups), reflection(second_groups)
