"""Generators for the graph families used in the analyses"""

from itertools import combinations, product

import networkx as nx
import numpy as np
import numpy.typing as npt
import sympy

from qwalk.core.exceptions import ParameterError
from qwalk.core.logging import get_logger
from qwalk.models.graph import MultiGraph
from qwalk.schemas.family import (
    BlowUpSpec,
    CompleteMultipartiteSpec,
    CompleteSpec,
    CycleSpec,
    DesignIncidenceSpec,
    DisjointUnionSpec,
    FamilySpec,
    FoldedCubeSpec,
    GnmSpec,
    HammingH33Spec,
    PaleySpec,
    PathSpec,
    PetersenSpec,
    TwinApexSpec,
)
from qwalk.services.graphs import design_incidence_graph

logger = get_logger(__name__)

# Vertices of the 7-vertex graph with a peak at time 6
TWIN_APEX_U = 0
TWIN_APEX_V = 3
_TWIN_APEX_PATH = [(4, 2), (2, 0), (0, 1), (1, 3)]
_APEX_NEIGHBOURS = (2, 0, 1, 3)

# 2-(9,3,2) design with 24 blocks
DESIGN_9_3_2_BLOCKS: tuple[tuple[int, int, int], ...] = tuple(
    (int(word[0]) - 1, int(word[1]) - 1, int(word[2]) - 1)
    for word in (
        "123 124 134 156 157 168 179 189 234 256 257 268 "
        "279 289 358 359 367 369 378 458 459 467 469 478"
    ).split()
)


def affine_plane_blocks(order: int = 3) -> list[list[int]]:
    """Lines of AG(2, q) for prime q; point (x, y) has index q*x + y"""
    if not sympy.isprime(order):
        raise ParameterError("Affine plane order must be prime", order=order)
    q = order
    lines = [[q * x + (slope * x + shift) % q for x in range(q)] for slope in range(q) for shift in range(q)]
    lines.extend([q * c + y for y in range(q)] for c in range(q))
    return [sorted(line) for line in lines]


def cycle(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, combinations(range(n), 2))


def path(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, ((i, i + 1) for i in range(n - 1)))


def complete_multipartite(parts: list[int]) -> MultiGraph:
    owner = [index for index, size in enumerate(parts) for _ in range(size)]
    pairs = [(i, j) for i, j in combinations(range(len(owner)), 2) if owner[i] != owner[j]]
    return MultiGraph.from_pairs(len(owner), pairs)


def graph_from_arc_counts(counts: npt.NDArray[np.int64]) -> MultiGraph:
    """Inverse of MultiGraph.adjacency_matrix"""
    n = counts.shape[0]
    edges = [(i, j, int(counts[i, j])) for i in range(n) for j in range(i + 1, n) if counts[i, j]]
    for i in range(n):
        if counts[i, i] % 2:
            raise ParameterError("Diagonal arc counts must be even", vertex=i)
        if counts[i, i]:
            edges.append((i, i, int(counts[i, i]) // 2))
    return MultiGraph(n_vertices=n, edges=tuple(edges))


def blowup_vertex(u: int, a: int, m: int) -> int:
    """Index of copy a of base vertex u in G[K_m complement]"""
    return u * m + a


def blowup(base: MultiGraph, m: int) -> MultiGraph:
    """Lexicographic product with the empty graph: adjacency A (x) J_m"""
    if m < 1:
        raise ParameterError("Blow-up size must be positive", m=m)
    counts = np.kron(base.adjacency_matrix(), np.ones((m, m), dtype=np.int64))
    return graph_from_arc_counts(counts)


def gnm_vertices(n: int, m: int) -> tuple[int, int, int]:
    """Indices of u, v, w in the five-layer graph"""
    return 0, n + 1, n + m + 2


def gnm(n: int, m: int) -> MultiGraph:
    """u - {x_1..x_n} - v - {y_1..y_m} - w"""
    u, v, w = gnm_vertices(n, m)
    xs = range(1, n + 1)
    ys = range(n + 2, n + m + 2)
    pairs = [(u, x) for x in xs] + [(x, v) for x in xs] + [(v, y) for y in ys] + [(y, w) for y in ys]
    labels = ["u", *[f"x{i}" for i in xs], "v", *[f"y{j - n - 1}" for j in ys], "w"]
    return MultiGraph.from_pairs(n + m + 3, pairs, labels=labels)


def hamming_h33() -> MultiGraph:
    words = list(product(range(3), repeat=3))
    pairs = [
        (i, j)
        for i, j in combinations(range(len(words)), 2)
        if sum(a != b for a, b in zip(words[i], words[j], strict=True)) == 1
    ]
    return MultiGraph.from_pairs(len(words), pairs)


def folded_cube(d: int) -> MultiGraph:
    """(d-1)-cube plus an edge between every pair of antipodal vertices"""
    size = 1 << (d - 1)
    full = size - 1
    pairs = [(v, v ^ (1 << bit)) for v in range(size) for bit in range(d - 1) if v < v ^ (1 << bit)]
    pairs.extend((v, v ^ full) for v in range(size) if v < v ^ full)
    return MultiGraph.from_pairs(size, pairs)


def twin_apex() -> MultiGraph:
    pairs = list(_TWIN_APEX_PATH)
    for apex in (5, 6):
        pairs.extend((apex, x) for x in _APEX_NEIGHBOURS)
    return MultiGraph.from_pairs(7, pairs, labels=["u", "w1", "w2", "v", "w3", "h1", "h2"])


def petersen() -> MultiGraph:
    return MultiGraph.from_networkx(nx.petersen_graph())


def paley(q: int) -> MultiGraph:
    if not sympy.isprime(q) or q % 4 != 1:
        raise ParameterError("Paley graphs need a prime q with q = 1 mod 4", q=q)
    squares = {(x * x) % q for x in range(1, q)}
    return MultiGraph.from_pairs(q, ((i, j) for i, j in combinations(range(q), 2) if (j - i) % q in squares))


def disjoint_union(parts: list[MultiGraph]) -> MultiGraph:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset, mult) for u, v, mult in part.edges)
        offset += part.n_vertices
    return MultiGraph(n_vertices=offset, edges=tuple(edges))


def generate(family: FamilySpec) -> MultiGraph:
    """Build the multigraph described by a family specification"""
    match family:
        case CycleSpec(n=n):
            graph = cycle(n)
        case CompleteSpec(n=n):
            graph = complete(n)
        case CompleteMultipartiteSpec(parts=parts):
            graph = complete_multipartite(parts)
        case PathSpec(n=n):
            graph = path(n)
        case BlowUpSpec(base=base, m=m):
            graph = blowup(generate(base), m)
        case DesignIncidenceSpec(v=v, blocks=blocks):
            graph = design_incidence_graph(v, blocks)
        case GnmSpec(n=n, m=m):
            graph = gnm(n, m)
        case HammingH33Spec():
            graph = hamming_h33()
        case FoldedCubeSpec(d=d):
            graph = folded_cube(d)
        case TwinApexSpec():
            graph = twin_apex()
        case PetersenSpec():
            graph = petersen()
        case PaleySpec(q=q):
            graph = paley(q)
        case DisjointUnionSpec(parts=parts):
            graph = disjoint_union([generate(part) for part in parts])
        case _:
            raise ParameterError("Unknown graph family", family=repr(family))

    logger.debug(
        "Generated graph",
        family=family.kind,
        vertices=graph.n_vertices,
        edges=graph.edge_count,
    )
    return graph
