"""Tests for walk constructions and time evolution"""

from collections.abc import Callable

import numpy as np
import pytest

from qwalk.core.exceptions import ConstructionError, FrameError, ParameterError
from qwalk.models.graph import MultiGraph
from qwalk.models.walk import TwoReflectionWalk, WalkKind
from qwalk.services.embeddings import k4_planar, k4_torus, toroidal_grid
from qwalk.services.families import complete, twin_apex
from qwalk.services.walks import (
    arc_reversal_walk,
    bt,
    evolve,
    evolve_states,
    exact_projectors,
    fidelity_gap,
    fidelity_profile,
    generic_walk,
    oracle_bt,
    star_state,
    szegedy_walk,
    vertex_face_walk,
)

from .conftest import Analysis, random_connected_graph, random_frame_walk


def test_k2_walk_swaps_the_arcs() -> None:
    """On K_2, U maps N e_0 to N e_1 in one step"""
    walk = arc_reversal_walk(complete(2))

    np.testing.assert_allclose(walk.B, [[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(evolve(walk, star_state(walk, 0), 1), star_state(walk, 1))
    assert fidelity_gap(walk, 0, 1, 1) == pytest.approx(0.0)


def test_walk_operator_is_orthogonal() -> None:
    """U is a real orthogonal matrix"""
    walk = arc_reversal_walk(twin_apex())

    np.testing.assert_allclose(walk.U @ walk.U.T, np.eye(walk.n_states), atol=1e-12)


def test_arc_reversal_needs_arcs_everywhere() -> None:
    """Isolated vertices are rejected"""
    graph = MultiGraph(n_vertices=3, edges=((0, 1, 1),))

    with pytest.raises(ConstructionError) as exc_info:
        arc_reversal_walk(graph)

    assert exc_info.value.details["isolated"] == [2]


def test_planar_k4_vertex_face_discriminant() -> None:
    """Triangles give diagonal -1/3 and off-diagonal 4/9"""
    walk = vertex_face_walk(k4_planar())
    expected = np.full((4, 4), 4 / 9)
    np.fill_diagonal(expected, -1 / 3)

    assert walk.kind == WalkKind.VERTEX_FACE
    np.testing.assert_allclose(walk.B, expected, atol=1e-12)


def test_torus_k4_vertex_face_discriminant() -> None:
    """Faces of degree 4 and 8 give B = (J - 2I)/2"""
    walk = vertex_face_walk(k4_torus())

    np.testing.assert_allclose(walk.B, 0.5 * (np.ones((4, 4)) - 2 * np.eye(4)), atol=1e-12)


def test_single_vertex_grid() -> None:
    """The (1, 1) grid is one vertex with two loops and B = [1]"""
    walk = vertex_face_walk(toroidal_grid(1, 1))

    assert (walk.n_states, walk.dim) == (4, 1)
    np.testing.assert_allclose(walk.B, [[1.0]], atol=1e-12)


def test_grid_vertex_face_walk_dimensions() -> None:
    """The grid walk acts on 4nm arcs and projects to nm vertices"""
    walk = vertex_face_walk(toroidal_grid(3, 4))

    assert walk.n_states == 48
    assert walk.dim == 12


def test_szegedy_uniform_2x2() -> None:
    """Uniform transitions on a 2 x 2 bipartition give B = J - I"""
    walk = szegedy_walk([[0.5, 0.5], [0.5, 0.5]], [[0.5, 0.5], [0.5, 0.5]])

    np.testing.assert_allclose(walk.B, [[0.0, 1.0], [1.0, 0.0]], atol=1e-12)


def test_szegedy_point_masses() -> None:
    """Consistent point masses give the identity"""
    walk = szegedy_walk([[1, 0], [0, 1]], [[1, 0], [0, 1]])

    np.testing.assert_allclose(walk.B, np.eye(2), atol=1e-12)


def test_szegedy_rejects_non_stochastic_rows() -> None:
    """Transition rows must be probability vectors"""
    with pytest.raises(ConstructionError):
        szegedy_walk([[0.5, 0.6], [0.5, 0.5]], [[0.5, 0.5], [0.5, 0.5]])
    with pytest.raises(ConstructionError):
        szegedy_walk([[1.0, 0.0, 0.0]], [[1.0]])


def test_generic_walk_checks_frames() -> None:
    """Frames must have orthonormal columns on a shared row set"""
    with pytest.raises(FrameError):
        generic_walk([[1.0, 1.0], [0.0, 1.0]], [[1.0], [0.0]])
    with pytest.raises(FrameError):
        generic_walk([[1.0], [0.0]], [[1.0], [0.0], [0.0]])


def test_signed_c4_discriminant(signed_c4_walk: TwoReflectionWalk) -> None:
    """The signed 4-cycle squares to half the identity"""
    B = signed_c4_walk.B
    expected = 0.5 * np.array(
        [
            [0.0, -1.0, 0.0, 1.0],
            [-1.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 1.0],
            [1.0, 0.0, 1.0, 0.0],
        ]
    )

    assert signed_c4_walk.kind == WalkKind.GENERIC
    np.testing.assert_allclose(B, expected, atol=1e-12)
    np.testing.assert_allclose(B @ B, 0.5 * np.eye(4), atol=1e-12)


@pytest.mark.parametrize("t", range(7))
def test_chebyshev_matches_dense_powers(cycle6: Analysis, t: int) -> None:
    """T_t(B) equals N^T U^t N"""
    walk, _, _ = cycle6

    np.testing.assert_allclose(bt(walk, t), oracle_bt(walk, t), atol=1e-10)


def _random_walk(seed: int) -> TwoReflectionWalk:
    if seed % 2:
        return random_frame_walk(seed)
    return arc_reversal_walk(random_connected_graph(4 + seed % 7, seed))


@pytest.mark.parametrize("seed", range(12))
def test_chebyshev_identity_on_random_walks(seed: int) -> None:
    """N^T U^t N = T_t(B) for t up to 16"""
    walk = _random_walk(seed)

    for t in range(17):
        np.testing.assert_allclose(bt(walk, t), oracle_bt(walk, t), atol=1e-8)


@pytest.mark.parametrize("seed", range(12))
def test_evolution_preserves_the_norm(seed: int) -> None:
    """U is orthogonal, so star states stay unit vectors"""
    walk = _random_walk(seed)

    norms = [np.linalg.norm(state) for state in evolve_states(walk, star_state(walk, 0), 64)]

    np.testing.assert_allclose(norms, 1.0, atol=1e-10)


@pytest.mark.parametrize("seed", range(12))
def test_reflections_are_involutions(seed: int) -> None:
    """(2NN^T - I)^2 = (2MM^T - I)^2 = I"""
    walk = _random_walk(seed)
    identity = np.eye(walk.n_states)

    for frame in (walk.N, walk.M):
        reflection = frame.reflection()
        np.testing.assert_allclose(reflection @ reflection, identity, atol=1e-10)


def test_fidelity_profile_on_cycle(cycle6: Analysis) -> None:
    """On C_6 the antipode is reached exactly at t = 3"""
    walk, _, _ = cycle6
    profile = fidelity_profile(walk, 0, 3, 6)

    assert profile[0] == pytest.approx(2.0)
    assert profile[3] == pytest.approx(0.0, abs=1e-12)
    assert fidelity_gap(walk, 0, 3, 3) == pytest.approx(profile[3], abs=1e-12)


def test_fidelity_gap_rejects_bad_phase(cycle6: Analysis) -> None:
    """gamma is +1 or -1"""
    walk, _, _ = cycle6

    with pytest.raises(ParameterError):
        fidelity_gap(walk, 0, 1, 2, gamma=0)


def test_evolve_rejects_bad_states(analyze_graph: Callable[..., Analysis]) -> None:
    """Initial states must be unit vectors of the right length"""
    walk, _, _ = analyze_graph(complete(3))

    with pytest.raises(ParameterError):
        evolve(walk, np.ones(walk.n_states), 1)
    with pytest.raises(ParameterError):
        evolve(walk, [1.0], 1)
    with pytest.raises(ParameterError):
        evolve(walk, star_state(walk, 0), -1)


def test_exact_projectors_reproduce_the_walk() -> None:
    """The rational reflections multiply to U"""
    walk = arc_reversal_walk(twin_apex())
    vertex_reflection, edge_reflection = exact_projectors(walk)
    product = np.array((edge_reflection * vertex_reflection).tolist(), dtype=float)

    np.testing.assert_allclose(product, walk.U, atol=1e-12)
