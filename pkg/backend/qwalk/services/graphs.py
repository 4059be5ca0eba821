"""Arc spaces and block-design validation"""

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from qwalk.core.exceptions import DesignError
from qwalk.core.logging import get_logger
from qwalk.models.graph import ArcSpace, MultiGraph
from qwalk.models.params import DesignParams

logger = get_logger(__name__)


def build_arc_space(graph: MultiGraph) -> ArcSpace:
    """Two arcs per edge instance; reversal swaps them (also for loops)"""
    tails: list[int] = []
    heads: list[int] = []
    edge_ids: list[int] = []
    reversal: list[int] = []
    for edge_id, (u, v) in enumerate(graph.edge_instances):
        tails.extend((u, v))
        heads.extend((v, u))
        edge_ids.extend((edge_id, edge_id))
        reversal.extend((2 * edge_id + 1, 2 * edge_id))
    return ArcSpace(
        tails=tuple(tails),
        heads=tuple(heads),
        edge_ids=tuple(edge_ids),
        reversal=tuple(reversal),
        n_vertices=graph.n_vertices,
    )


def validate_design(v: int, blocks: Sequence[Sequence[int]]) -> DesignParams:
    """
    Check that blocks form a 2-(v, k, lambda) design and return its parameters.

    Args:
        v: Number of points, labelled 0..v-1
        blocks: Equal-size subsets of the points

    Returns:
        DesignParams with b, r, k and lambda filled in

    Raises:
        DesignError: k out of range, a malformed block, or the first point/pair
            breaking the replication or balance condition
    """
    if not blocks:
        raise DesignError("A design needs at least one block")
    normalized = [tuple(sorted(int(x) for x in block)) for block in blocks]
    k = len(normalized[0])
    if not 1 < k < v:
        raise DesignError("Block size must satisfy 1 < k < v", k=k, v=v)

    for index, block in enumerate(normalized):
        if len(block) != k:
            raise DesignError("All blocks must have the same size", block=index, size=len(block), k=k)
        if len(set(block)) != k:
            raise DesignError("Block repeats a point", block=index)
        if block[0] < 0 or block[-1] >= v:
            raise DesignError("Block point out of range", block=index, v=v)

    replication = [0] * v
    pair_counts: dict[tuple[int, int], int] = {pair: 0 for pair in combinations(range(v), 2)}
    for block in normalized:
        for point in block:
            replication[point] += 1
        for pair in combinations(block, 2):
            pair_counts[pair] += 1

    for point, count in enumerate(replication):
        if count == 0:
            raise DesignError("Point lies in no block", point=point)

    r = replication[0]
    for point, count in enumerate(replication):
        if count != r:
            raise DesignError(
                "Points lie in different numbers of blocks", point=point, count=count, expected=r
            )

    lam = pair_counts[(0, 1)]
    for pair, count in pair_counts.items():
        if count != lam:
            raise DesignError(
                "Pairs lie in different numbers of blocks", pair=pair, count=count, expected=lam
            )
    if lam == 0:
        raise DesignError("Every pair of points must lie in some block")

    params = DesignParams(v=v, b=len(normalized), r=r, k=k, lam=lam)
    params.check_relations()
    logger.debug(
        "Validated design",
        v=v,
        b=params.b,
        r=r,
        k=k,
        lam=lam,
        ratio=str(Fraction(r - lam, r * k)),
    )
    return params


def design_incidence_graph(v: int, blocks: Sequence[Sequence[int]]) -> MultiGraph:
    """Bipartite point-block graph: points 0..v-1, block j is vertex v + j"""
    pairs = [(int(point), v + j) for j, block in enumerate(blocks) for point in block]
    labels = [f"p{i}" for i in range(v)] + [f"b{j}" for j in range(len(blocks))]
    return MultiGraph.from_pairs(v + len(blocks), pairs, labels=labels)
