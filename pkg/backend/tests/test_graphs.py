"""Tests for multigraphs, arc spaces, families and design validation"""

import pytest

from qwalk.core.exceptions import DesignError, GraphError, ParameterError
from qwalk.models.graph import MultiGraph
from qwalk.schemas import parse_family
from qwalk.services.families import (
    DESIGN_9_3_2_BLOCKS,
    affine_plane_blocks,
    blowup,
    blowup_vertex,
    complete_multipartite,
    folded_cube,
    generate,
    gnm,
    gnm_vertices,
    hamming_h33,
    paley,
    petersen,
    twin_apex,
)
from qwalk.services.graphs import build_arc_space, design_incidence_graph, validate_design

FANO_BLOCKS = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]


def test_edges_are_canonical_and_merged() -> None:
    """Reversed and repeated pairs merge into one edge with multiplicity"""
    graph = MultiGraph(n_vertices=3, edges=((1, 0, 1), (0, 1, 2), (2, 2, 1)))

    assert graph.edges == ((0, 1, 3), (2, 2, 1))
    assert graph.edge_count == 4


def test_loop_counts_twice_in_degree() -> None:
    """A loop adds 2 to the degree and 2 to the diagonal arc count"""
    graph = MultiGraph(n_vertices=2, edges=((0, 0, 1), (0, 1, 1)))

    assert graph.degree(0) == 3
    assert graph.degree(1) == 1
    assert graph.adjacency_matrix()[0, 0] == 2


def test_invalid_edges_are_rejected() -> None:
    """Out-of-range endpoints and zero multiplicities raise GraphError"""
    with pytest.raises(GraphError):
        MultiGraph(n_vertices=2, edges=((0, 2, 1),))
    with pytest.raises(GraphError):
        MultiGraph(n_vertices=2, edges=((0, 1, 0),))
    with pytest.raises(GraphError):
        MultiGraph(n_vertices=2, edges=((0, 1, 1),), labels=("a",))


def test_arc_space_reversal_is_an_involution() -> None:
    """Every edge instance owns two arcs swapped by reversal"""
    graph = MultiGraph(n_vertices=3, edges=((0, 1, 2), (1, 2, 1), (2, 2, 1)))
    arcs = build_arc_space(graph)

    assert len(arcs) == 2 * graph.edge_count
    for arc in range(len(arcs)):
        back = arcs.reversal[arc]
        assert back != arc
        assert arcs.reversal[back] == arc
        assert arcs.tails[back] == arcs.heads[arc]
        assert arcs.edge_ids[back] == arcs.edge_ids[arc]


def test_out_arcs_match_degrees() -> None:
    """The number of arcs leaving a vertex equals its degree"""
    graph = twin_apex()
    arcs = build_arc_space(graph)

    assert [len(out) for out in arcs.out_arcs] == [graph.degree(v) for v in range(graph.n_vertices)]


def test_named_families_have_expected_sizes() -> None:
    """Bundled families have the documented vertex and edge counts"""
    assert (petersen().n_vertices, petersen().edge_count) == (10, 15)
    assert (hamming_h33().n_vertices, hamming_h33().edge_count) == (27, 81)
    assert (folded_cube(8).n_vertices, folded_cube(8).edge_count) == (128, 512)
    assert (paley(13).n_vertices, paley(13).edge_count) == (13, 39)
    assert twin_apex().n_vertices == 7
    assert complete_multipartite([2, 2, 2]).edge_count == 12


def test_gnm_layers() -> None:
    """G_{n,m} has n + m + 3 vertices and 2(n + m) edges"""
    graph = gnm(2, 3)
    u, v, w = gnm_vertices(2, 3)

    assert graph.n_vertices == 8
    assert graph.edge_count == 10
    assert (graph.label(u), graph.label(v), graph.label(w)) == ("u", "v", "w")
    assert graph.degree(v) == 5


def test_blowup_replaces_vertices_by_cocliques() -> None:
    """Copies of a vertex are non-adjacent and inherit all its neighbours"""
    base = MultiGraph.from_pairs(2, [(0, 1)])
    blown = blowup(base, 3)

    assert blown.n_vertices == 6
    assert blown.edge_count == 9
    assert blown.adjacency_matrix()[blowup_vertex(0, 0, 3), blowup_vertex(0, 1, 3)] == 0
    assert blown.adjacency_matrix()[blowup_vertex(0, 2, 3), blowup_vertex(1, 0, 3)] == 1


def test_generate_from_nested_family_spec() -> None:
    """Family specs nest through blowup and disjoint_union"""
    family = parse_family(
        {
            "kind": "disjoint_union",
            "parts": [{"kind": "cycle", "n": 4}, {"kind": "blowup", "base": {"kind": "path", "n": 2}, "m": 2}],
        }
    )
    graph = generate(family)

    assert graph.n_vertices == 8
    assert len(graph.components()) == 2


def test_invalid_family_parameters() -> None:
    """Family validation errors surface as ParameterError"""
    with pytest.raises(ParameterError):
        parse_family({"kind": "cycle", "n": 2})
    with pytest.raises(ParameterError):
        generate(parse_family({"kind": "paley", "q": 7}))


def test_affine_plane_is_a_design() -> None:
    """AG(2, 3) is a 2-(9, 3, 1) design with 12 blocks"""
    params = validate_design(9, affine_plane_blocks(3))

    assert (params.v, params.b, params.r, params.k, params.lam) == (9, 12, 4, 3, 1)


def test_fano_and_9_3_2_designs() -> None:
    """The Fano plane and the bundled 2-(9,3,2) design validate"""
    fano = validate_design(7, FANO_BLOCKS)
    nine = validate_design(9, [list(block) for block in DESIGN_9_3_2_BLOCKS])

    assert (fano.b, fano.r, fano.lam) == (7, 3, 1)
    assert (nine.b, nine.r, nine.lam) == (24, 8, 2)


def test_design_rejection_names_the_violation() -> None:
    """Dropping a block breaks replication at a named point"""
    with pytest.raises(DesignError) as exc_info:
        validate_design(7, FANO_BLOCKS[:-1])

    assert "point" in exc_info.value.details or "pair" in exc_info.value.details


def test_design_rejects_mixed_block_sizes() -> None:
    """Blocks of different sizes are rejected"""
    with pytest.raises(DesignError):
        validate_design(4, [[0, 1], [0, 1, 2]])


def test_incidence_graph_is_bipartite() -> None:
    """Points connect only to blocks"""
    graph = design_incidence_graph(7, FANO_BLOCKS)

    assert graph.n_vertices == 14
    assert graph.edge_count == 21
    assert all(u < 7 <= v for u, v, _ in graph.edges)
