"""Pydantic schemas for graphs, embeddings, frames and designs"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from qwalk.models.embedding import Layout, RotationMap
from qwalk.models.graph import MultiGraph
from qwalk.models.params import DesignParams
from qwalk.models.walk import TwoReflectionWalk


class GraphSchema(BaseModel):
    """Multigraph as a vertex count and [u, v] or [u, v, multiplicity] edges"""

    kind: Literal["graph"] = "graph"
    n: int = Field(..., ge=0, description="Number of vertices")
    edges: list[list[int]] = Field(default_factory=list, description="Edges, loops allowed")
    labels: list[str] | None = Field(None, description="Optional vertex labels")

    @field_validator("edges")
    @classmethod
    def edge_shape(cls, v: list[list[int]]) -> list[list[int]]:
        for edge in v:
            if len(edge) not in (2, 3):
                raise ValueError("Edges must be [u, v] or [u, v, multiplicity]")
        return v

    def to_domain(self) -> MultiGraph:
        return MultiGraph(
            n_vertices=self.n,
            edges=tuple((e[0], e[1], e[2] if len(e) == 3 else 1) for e in self.edges),
            labels=tuple(self.labels) if self.labels is not None else None,
        )

    @classmethod
    def from_domain(cls, graph: MultiGraph) -> "GraphSchema":
        return cls(
            n=graph.n_vertices,
            edges=[[u, v, mult] for u, v, mult in graph.edges],
            labels=list(graph.labels) if graph.labels is not None else None,
        )


class LayoutSchema(BaseModel):
    vertices: list[tuple[float, float]]
    arc_directions: list[tuple[float, float]] | None = None

    def to_domain(self) -> Layout:
        return Layout(
            vertices=tuple(self.vertices),
            arc_directions=tuple(self.arc_directions) if self.arc_directions is not None else None,
        )

    @classmethod
    def from_domain(cls, layout: Layout) -> "LayoutSchema":
        return cls(
            vertices=list(layout.vertices),
            arc_directions=list(layout.arc_directions) if layout.arc_directions is not None else None,
        )


class EmbeddingSchema(BaseModel):
    """Rotation system: for every vertex, its outgoing arc ids in cyclic order

    Edge instance k (in canonical edge order) owns arcs 2k and 2k + 1.
    """

    kind: Literal["embedding"] = "embedding"
    graph: GraphSchema
    rotation: list[list[int]] = Field(..., description="Arc ids around each vertex")
    layout: LayoutSchema | None = None

    def to_domain(self) -> RotationMap:
        """Traced rotation map"""
        from qwalk.services.embeddings import rotation_map, trace_faces

        layout = self.layout.to_domain() if self.layout is not None else None
        return trace_faces(rotation_map(self.graph.to_domain(), self.rotation, layout=layout))

    @classmethod
    def from_domain(cls, embedding: RotationMap) -> "EmbeddingSchema":
        return cls(
            graph=GraphSchema.from_domain(embedding.graph),
            rotation=[list(cyc) for cyc in embedding.rotation],
            layout=LayoutSchema.from_domain(embedding.layout) if embedding.layout is not None else None,
        )


class FramesSchema(BaseModel):
    """Generic walk frames as dense matrices with a shared row index set"""

    model_config = ConfigDict(populate_by_name=True)

    kind: Literal["frames"] = "frames"
    n_frame: list[list[float]] = Field(..., alias="N", min_length=1)
    m_frame: list[list[float]] = Field(..., alias="M", min_length=1)

    def to_domain(self) -> TwoReflectionWalk:
        from qwalk.services.walks import generic_walk

        return generic_walk(self.n_frame, self.m_frame)


class SzegedySchema(BaseModel):
    """p[y] is a distribution over X, q[x] a distribution over Y"""

    kind: Literal["szegedy"] = "szegedy"
    p: list[list[float]] = Field(..., min_length=1)
    q: list[list[float]] = Field(..., min_length=1)

    def to_domain(self) -> TwoReflectionWalk:
        from qwalk.services.walks import szegedy_walk

        return szegedy_walk(self.p, self.q)


class DesignSchema(BaseModel):
    """Block design on points 0..v-1"""

    kind: Literal["design"] = "design"
    v: int = Field(..., ge=2, description="Number of points")
    blocks: list[list[int]] = Field(..., min_length=1)

    def to_domain(self) -> DesignParams:
        """Validated design parameters"""
        from qwalk.services.graphs import validate_design

        return validate_design(self.v, self.blocks)

    def incidence_graph(self) -> MultiGraph:
        from qwalk.services.graphs import design_incidence_graph

        return design_incidence_graph(self.v, self.blocks)
