"""Spectral decomposition of B and exact characteristic polynomials"""

import math
from fractions import Fraction

import numpy as np
import numpy.typing as npt
import scipy.linalg
import sympy
from sympy.polys.matrices import DomainMatrix

from qwalk.core.config import settings
from qwalk.core.exceptions import ParameterError, SpectralError, UnsupportedExactError
from qwalk.core.logging import get_logger
from qwalk.models.spectral import SpectralData, TraceFilter
from qwalk.models.walk import TwoReflectionWalk, WalkKind
from qwalk.services.embeddings import toroidal_grid
from qwalk.services.rational_cosine import X
from qwalk.services.walks import exact_projectors, vertex_face_walk

logger = get_logger(__name__)

FloatMatrix = npt.NDArray[np.float64]

_SYMMETRY_TOL = 1e-10


def decompose(
    B: FloatMatrix,
    cluster_tol: float | None = None,
    charpoly: sympy.Poly | None = None,
) -> SpectralData:
    """
    Spectral decomposition of a real symmetric matrix.

    Args:
        B: Symmetric matrix (to 1e-10)
        cluster_tol: Eigenvalues closer than this to their neighbour in sorted
            order are merged; defaults to settings.CLUSTER_TOL
        charpoly: Exact characteristic polynomial to attach, if known

    Returns:
        SpectralData with distinct eigenvalues in descending order, each the
        mean of its cluster, and E_theta = V V^T over the cluster's eigenvectors

    Raises:
        SpectralError: B is not square or not symmetric
    """
    tol = settings.CLUSTER_TOL if cluster_tol is None else cluster_tol
    matrix = np.asarray(B, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SpectralError("Matrix must be square", shape=tuple(matrix.shape))
    if matrix.size == 0:
        raise SpectralError("Matrix is empty")
    asymmetry = float(np.max(np.abs(matrix - matrix.T)))
    if asymmetry > _SYMMETRY_TOL:
        raise SpectralError("Matrix is not symmetric", asymmetry=asymmetry)

    values, vectors = scipy.linalg.eigh((matrix + matrix.T) / 2.0)
    order = np.argsort(values)[::-1]
    values, vectors = values[order], vectors[:, order]

    clusters: list[list[int]] = [[0]]
    for index in range(1, len(values)):
        if values[clusters[-1][-1]] - values[index] > tol:
            clusters.append([index])
        else:
            clusters[-1].append(index)

    eigenvalues = tuple(float(np.mean(values[cluster])) for cluster in clusters)
    idempotents = tuple(vectors[:, cluster] @ vectors[:, cluster].T for cluster in clusters)
    logger.debug(
        "Decomposed matrix",
        dim=int(matrix.shape[0]),
        distinct=len(clusters),
        cluster_tol=tol,
    )
    return SpectralData(
        eigenvalues=eigenvalues,
        multiplicities=tuple(len(cluster) for cluster in clusters),
        idempotents=idempotents,
        cluster_tol=tol,
        charpoly=charpoly,
    )


def _charpoly_from_rows(rows: list[list[Fraction]]) -> sympy.Poly:
    """det(xI - R) for a rational matrix R, over QQ"""
    size = len(rows)
    matrix = DomainMatrix(
        [[sympy.QQ(x.numerator, x.denominator) for x in row] for row in rows],
        (size, size),
        sympy.QQ,
    )
    coefficients = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in matrix.charpoly()]
    return sympy.Poly(coefficients, X, domain=sympy.QQ)


def _arc_reversal_similar(walk: TwoReflectionWalk) -> list[list[Fraction]]:
    """D_G^{-1} A, similar to B by the diagonal square-root degree matrix"""
    assert walk.graph is not None
    counts = walk.graph.adjacency_matrix()
    degrees = walk.graph.degrees
    size = walk.graph.n_vertices
    return [[Fraction(int(counts[u, v]), int(degrees[u])) for v in range(size)] for u in range(size)]


def _vertex_face_similar(walk: TwoReflectionWalk) -> list[list[Fraction]]:
    """2 D_v^{-1} C D_f^{-1} C^T - I with C the vertex-face incidence"""
    assert walk.embedding is not None
    alpha = walk.embedding.incidence
    degrees = walk.embedding.graph.degrees
    face_degrees = walk.embedding.face_degrees
    size, faces = alpha.shape
    rows: list[list[Fraction]] = []
    for u in range(size):
        row = []
        for v in range(size):
            total = sum(
                (Fraction(int(alpha[u, f]) * int(alpha[v, f]), face_degrees[f]) for f in range(faces)),
                Fraction(0),
            )
            row.append(2 * total / int(degrees[u]) - (1 if u == v else 0))
        rows.append(row)
    return rows


def _frame_charpoly(walk: TwoReflectionWalk) -> sympy.Poly:
    N, M = walk.N.exact_matrix(), walk.M.exact_matrix()
    D = N.T * M
    B = (2 * D * D.T - sympy.eye(walk.dim)).applyfunc(lambda entry: sympy.radsimp(sympy.expand(entry)))
    if all(entry.is_Rational for entry in B):
        rows = [
            [Fraction(int(B[i, j].p), int(B[i, j].q)) for j in range(walk.dim)] for i in range(walk.dim)
        ]
        return _charpoly_from_rows(rows)

    coefficients = [sympy.radsimp(sympy.expand(c)) for c in B.charpoly(X).all_coeffs()]
    if not all(c.is_Rational for c in coefficients):
        raise UnsupportedExactError("Characteristic polynomial has irrational coefficients")
    return sympy.Poly(coefficients, X, domain=sympy.QQ)


def exact_charpoly(walk: TwoReflectionWalk) -> sympy.Poly:
    """
    Exact characteristic polynomial of B over the rationals.

    Arc-reversal and vertex-face walks use a rational matrix similar to B;
    other walks need frames whose squared entries are rational.

    Raises:
        UnsupportedExactError: no rational route to the polynomial
    """
    if walk.kind == WalkKind.ARC_REVERSAL and walk.graph is not None:
        poly = _charpoly_from_rows(_arc_reversal_similar(walk))
    elif walk.kind == WalkKind.VERTEX_FACE and walk.embedding is not None:
        poly = _charpoly_from_rows(_vertex_face_similar(walk))
    elif walk.N.has_exact and walk.M.has_exact:
        poly = _frame_charpoly(walk)
    else:
        raise UnsupportedExactError("Frames have irrational squared entries", kind=walk.kind.value)
    logger.debug("Computed exact characteristic polynomial", kind=walk.kind.value, degree=poly.degree())
    return poly


def spectral_data(
    walk: TwoReflectionWalk, exact: bool = True, cluster_tol: float | None = None
) -> SpectralData:
    """Decompose B, attaching the exact characteristic polynomial when available"""
    charpoly = None
    if exact:
        if walk.dim > settings.EXACT_MAX_DIMENSION:
            logger.warning(
                "Skipping exact characteristic polynomial",
                dim=walk.dim,
                limit=settings.EXACT_MAX_DIMENSION,
            )
        else:
            try:
                charpoly = exact_charpoly(walk)
            except UnsupportedExactError as exc:
                logger.warning("Exact path unavailable, continuing numerically", reason=exc.message)
    return decompose(walk.B, cluster_tol=cluster_tol, charpoly=charpoly)


def rational_eigenvalue(charpoly: sympy.Poly, theta: float, tol: float = 1e-9) -> Fraction | None:
    """Rational root of charpoly within tol of theta"""
    for root in charpoly.ground_roots():
        value = Fraction(int(root.p), int(root.q))
        if abs(float(value) - theta) <= tol:
            return value
    return None


def charpoly_of_U_filter(n: int, m: int) -> TraceFilter:
    """
    Second characteristic-polynomial coefficient of U for the (n, m) grid.

    A periodic U has an integral characteristic polynomial, so a
    non-integral c2 rules periodicity out.
    """
    if n < 3 or m < 3:
        raise ParameterError("Trace formulas need n, m >= 3", n=n, m=m)
    size = n * m
    tr_U = Fraction(size)
    tr_U2 = Fraction(9 * size, 4)
    c2 = (tr_U * tr_U - tr_U2) / 2
    return TraceFilter(n=n, m=m, tr_U=tr_U, tr_U2=tr_U2, c2=c2)


def dense_trace_check(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Exact tr(U) and tr(U^2) of the grid vertex-face walk from its rational reflections"""
    walk = vertex_face_walk(toroidal_grid(n, m))
    vertex_reflection, face_reflection = exact_projectors(walk)
    U = face_reflection * vertex_reflection
    tr_U = U.trace()
    tr_U2 = (U * U).trace()
    return Fraction(int(tr_U.p), int(tr_U.q)), Fraction(int(tr_U2.p), int(tr_U2.q))


def cycle_idempotent(n: int, k: int) -> FloatMatrix:
    """Idempotent of cos(2*pi*k/n) for the arc-reversal walk on C_n, 0 <= k <= n/2"""
    if n < 3 or not 0 <= 2 * k <= n:
        raise ParameterError("Need n >= 3 and 0 <= k <= n/2", n=n, k=k)
    index = np.arange(n)
    phases = np.cos(2.0 * math.pi * k * (index[:, None] - index[None, :]) / n)
    scale = 1.0 / n if k == 0 or 2 * k == n else 2.0 / n
    return scale * phases


def grid_spectrum(n: int, m: int) -> npt.NDArray[np.float64]:
    """Eigenvalues of B for the (n, m) grid vertex-face walk with multiplicity, descending"""
    if n < 1 or m < 1:
        raise ParameterError("Grid dimensions must be positive", n=n, m=m)
    row = np.cos(2.0 * math.pi * np.arange(n) / n) + 1.0
    col = np.cos(2.0 * math.pi * np.arange(m) / m) + 1.0
    values = 0.5 * np.outer(row, col).ravel() - 1.0
    return np.sort(values)[::-1]
