"""Multigraph and arc-space models"""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np
import numpy.typing as npt

from qwalk.core.exceptions import GraphError

# (u, v, multiplicity) with u <= v
Edge = tuple[int, int, int]


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph with loops

    Edges are stored canonically: u <= v, one entry per vertex pair with its
    multiplicity, sorted. A loop contributes 2 to the degree of its vertex.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise GraphError("Vertex count must be nonnegative", n=self.n_vertices)

        merged: Counter[tuple[int, int]] = Counter()
        for edge in self.edges:
            if len(edge) != 3:
                raise GraphError("Edges must be (u, v, multiplicity) triples", edge=edge)
            u, v, mult = (int(x) for x in edge)
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError("Edge endpoint out of range", edge=(u, v), n=self.n_vertices)
            if mult < 1:
                raise GraphError("Edge multiplicity must be at least 1", edge=(u, v), mult=mult)
            merged[(min(u, v), max(u, v))] += mult

        object.__setattr__(
            self, "edges", tuple((u, v, mult) for (u, v), mult in sorted(merged.items()))
        )
        if self.labels is not None:
            if len(self.labels) != self.n_vertices:
                raise GraphError(
                    "Label count must match vertex count",
                    labels=len(self.labels),
                    n=self.n_vertices,
                )
            object.__setattr__(self, "labels", tuple(str(label) for label in self.labels))

    @classmethod
    def from_pairs(
        cls, n_vertices: int, pairs: Iterable[tuple[int, int]], labels: Iterable[str] | None = None
    ) -> "MultiGraph":
        """Build from a list of vertex pairs, repeated pairs adding multiplicity"""
        return cls(
            n_vertices=n_vertices,
            edges=tuple((u, v, 1) for u, v in pairs),
            labels=tuple(labels) if labels is not None else None,
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "MultiGraph":
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_pairs(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    @cached_property
    def edge_instances(self) -> tuple[tuple[int, int], ...]:
        """Every edge copy in canonical order; position = edge-instance id"""
        return tuple((u, v) for u, v, mult in self.edges for _ in range(mult))

    @property
    def edge_count(self) -> int:
        return sum(mult for _, _, mult in self.edges)

    @cached_property
    def degrees(self) -> npt.NDArray[np.int64]:
        deg = np.zeros(self.n_vertices, dtype=np.int64)
        for u, v, mult in self.edges:
            deg[u] += mult
            deg[v] += mult
        return deg

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def adjacency_matrix(self) -> npt.NDArray[np.int64]:
        """Arc-count matrix: A(u,v) = #arcs u -> v, loops counted twice on the diagonal"""
        adj = np.zeros((self.n_vertices, self.n_vertices), dtype=np.int64)
        for u, v, mult in self.edges:
            if u == v:
                adj[u, u] += 2 * mult
            else:
                adj[u, v] += mult
                adj[v, u] += mult
        return adj

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n_vertices))
        for u, v in self.edge_instances:
            graph.add_edge(u, v)
        return graph

    def components(self) -> list[list[int]]:
        return sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and len(self.components()) == 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class ArcSpace:
    """Arcs of a multigraph with the reversal involution

    Edge instance k owns arcs 2k (u -> v) and 2k + 1 (v -> u) for its canonical
    endpoints u <= v; both arcs of a loop have the same tail.
    """

    tails: tuple[int, ...]
    heads: tuple[int, ...]
    edge_ids: tuple[int, ...]
    reversal: tuple[int, ...]
    n_vertices: int

    def __len__(self) -> int:
        return len(self.tails)

    def arcs_of_edge(self, edge_id: int) -> tuple[int, int]:
        return 2 * edge_id, 2 * edge_id + 1

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for arc, tail in enumerate(self.tails):
            buckets[tail].append(arc)
        return tuple(tuple(bucket) for bucket in buckets)
