"""Tests for spectral decomposition and exact characteristic polynomials"""

from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
import sympy

from qwalk.core.exceptions import ParameterError, SpectralError
from qwalk.models.walk import TwoReflectionWalk
from qwalk.services.embeddings import toroidal_grid
from qwalk.services.families import complete
from qwalk.services.rational_cosine import X
from qwalk.services.spectral import (
    charpoly_of_U_filter,
    cycle_idempotent,
    decompose,
    dense_trace_check,
    exact_charpoly,
    grid_spectrum,
    rational_eigenvalue,
    spectral_data,
)
from qwalk.services.walks import arc_reversal_walk, vertex_face_walk

from .conftest import Analysis, random_connected_graph


def test_cycle_spectrum(cycle6: Analysis) -> None:
    """C_6 has eigenvalues 1, 1/2, -1/2, -1 with multiplicities 1, 2, 2, 1"""
    _, spec, _ = cycle6

    np.testing.assert_allclose(spec.eigenvalues, [1.0, 0.5, -0.5, -1.0], atol=1e-12)
    assert spec.multiplicities == (1, 2, 2, 1)


def test_idempotents_resolve_the_identity(cycle6: Analysis) -> None:
    """Idempotents sum to I, are projections and rebuild B"""
    walk, spec, _ = cycle6

    np.testing.assert_allclose(sum(spec.idempotents), np.eye(6), atol=1e-12)
    for E in spec.idempotents:
        np.testing.assert_allclose(E @ E, E, atol=1e-12)
    np.testing.assert_allclose(spec.reconstruct(), walk.B, atol=1e-12)


def test_cycle_idempotent_matches_closed_form(cycle6: Analysis) -> None:
    """The cluster of 1/2 on C_6 is (2/6) cos(2 pi (i - j) / 6)"""
    _, spec, _ = cycle6

    np.testing.assert_allclose(spec.idempotents[1], cycle_idempotent(6, 1), atol=1e-12)
    np.testing.assert_allclose(spec.idempotents[3], cycle_idempotent(6, 3), atol=1e-12)


def test_cycle_idempotent_range() -> None:
    """k runs over 0..n/2"""
    with pytest.raises(ParameterError):
        cycle_idempotent(6, 4)


def test_decompose_rejects_bad_input() -> None:
    """Non-square and non-symmetric matrices raise SpectralError"""
    with pytest.raises(SpectralError):
        decompose(np.zeros((2, 3)))
    with pytest.raises(SpectralError):
        decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_cluster_tolerance_merges_close_eigenvalues() -> None:
    """Eigenvalues within cluster_tol share one idempotent"""
    spec = decompose(np.diag([1.0, 1.0 + 1e-12, 0.0]), cluster_tol=1e-9)

    assert len(spec) == 2
    assert spec.multiplicities == (2, 1)


def test_exact_cycle_charpoly(cycle6: Analysis) -> None:
    """The rational roots of the C_6 polynomial are the four cosines"""
    _, spec, _ = cycle6

    assert spec.charpoly is not None
    assert spec.rational_roots == (Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1))
    assert rational_eigenvalue(spec.charpoly, 0.5) == Fraction(1, 2)
    assert spec.charpoly_coefficients() is not None


def test_exact_charpoly_from_frames(signed_c4_walk: TwoReflectionWalk) -> None:
    """Frames with rational squares give (x^2 - 1/2)^2"""
    poly = exact_charpoly(signed_c4_walk)

    assert poly == sympy.Poly((X**2 - sympy.Rational(1, 2)) ** 2, X, domain=sympy.QQ)


def test_vertex_face_charpoly_degree() -> None:
    """The vertex-face polynomial has degree |V|"""
    walk = vertex_face_walk(toroidal_grid(3, 3))
    spec = spectral_data(walk)

    assert spec.charpoly is not None
    assert spec.charpoly.degree() == 9


def test_numeric_only_spectrum(cycle6: Analysis) -> None:
    """exact=False leaves the polynomial out"""
    walk, _, _ = cycle6

    assert spectral_data(walk, exact=False).charpoly is None


@pytest.mark.parametrize(
    ("n", "m", "c2", "integral"),
    [
        (3, 3, Fraction(243, 8), False),
        (4, 4, Fraction(110), True),
        (4, 6, Fraction(261), True),
    ],
)
def test_trace_filter(n: int, m: int, c2: Fraction, integral: bool) -> None:
    """c2 = nm(4nm - 9)/8"""
    trace_filter = charpoly_of_U_filter(n, m)

    assert trace_filter.c2 == c2
    assert trace_filter.integral is integral


def test_trace_filter_needs_large_grids() -> None:
    """The trace formulas hold for n, m >= 3"""
    with pytest.raises(ParameterError):
        charpoly_of_U_filter(2, 5)


_TRACE_GRIDS = [
    pytest.param(n, m, marks=pytest.mark.slow) if n * m > 16 else pytest.param(n, m)
    for n in range(3, 13)
    for m in range(n, 13)
    if n * m <= 36
]


@pytest.mark.parametrize(("n", "m"), [(n, m) for n in range(3, 8) for m in range(n, 8)])
def test_trace_filter_rejects_grids_with_nm_not_divisible_by_8(n: int, m: int) -> None:
    """c2 is integral exactly when 8 divides nm"""
    assert charpoly_of_U_filter(n, m).integral is (n * m % 8 == 0)


@pytest.mark.parametrize(("n", "m"), _TRACE_GRIDS)
def test_dense_traces_match_formulas(n: int, m: int) -> None:
    """Exact traces of U agree with the closed forms"""
    trace_filter = charpoly_of_U_filter(n, m)

    assert dense_trace_check(n, m) == (trace_filter.tr_U, trace_filter.tr_U2)


@pytest.mark.parametrize(("n", "m"), [(3, 4), (4, 4), (5, 6)])
def test_grid_spectrum_closed_form(n: int, m: int) -> None:
    """(1 + cos a)(1 + cos b)/2 - 1 over the grid frequencies"""
    walk = vertex_face_walk(toroidal_grid(n, m))
    numeric = np.sort(np.linalg.eigvalsh(walk.B))[::-1]

    np.testing.assert_allclose(grid_spectrum(n, m), numeric, atol=1e-10)


@pytest.mark.parametrize("seed", range(50))
def test_idempotent_algebra_on_random_graphs(seed: int) -> None:
    """Idempotents resolve I, are mutually orthogonal, PSD and agree with the exact roots"""
    walk = arc_reversal_walk(random_connected_graph(2 + seed % 11, seed))
    spec = spectral_data(walk)
    dim = walk.dim

    np.testing.assert_allclose(sum(spec.idempotents), np.eye(dim), atol=1e-9)
    for i, E in enumerate(spec.idempotents):
        for j, F in enumerate(spec.idempotents):
            np.testing.assert_allclose(E @ F, E if i == j else np.zeros((dim, dim)), atol=1e-9)
        np.testing.assert_allclose(walk.B @ E, spec.eigenvalues[i] * E, atol=1e-8)
        assert np.all(np.diag(E) >= -1e-9)
        assert np.all(np.linalg.eigvalsh(E) >= -1e-9)
    assert np.max(np.abs(spec.reconstruct() - walk.B)) < 1e-8
    assert spec.matches_charpoly(1e-8)


def test_charpoly_roots_carry_multiplicities() -> None:
    """K_5 has roots 1 and -1/4 with multiplicities 1 and 4"""
    spec = spectral_data(arc_reversal_walk(complete(5)))

    assert [count for _, count in spec.charpoly_roots] == [1, 4]
    np.testing.assert_allclose([root for root, _ in spec.charpoly_roots], [1.0, -0.25], atol=1e-12)
    assert spec.matches_charpoly(1e-8)


def test_wrong_multiplicities_do_not_match(cycle6: Analysis) -> None:
    """A polynomial with the right roots but other multiplicities disagrees with the clustering"""
    _, spec, _ = cycle6
    half = sympy.Rational(1, 2)
    wrong = sympy.Poly((X - 1) * (X - half) ** 3 * (X + half) * (X + 1), X, domain=sympy.QQ)

    assert spec.matches_charpoly(1e-8)
    assert not replace(spec, charpoly=wrong).matches_charpoly(1e-8)
    assert not decompose(np.diag([1.0, 0.5]), charpoly=sympy.Poly(X**2 - 1, X)).matches_charpoly(1e-8)
