"""Rotation systems and faces of orientable embeddings"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from qwalk.core.exceptions import ConstructionError
from qwalk.models.graph import ArcSpace, MultiGraph


@dataclass(frozen=True)
class Face:
    """Facial walk as a cyclic sequence of arcs"""

    arcs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Layout:
    """Drawing hints: vertex coordinates and optional per-arc unit directions"""

    vertices: tuple[tuple[float, float], ...]
    arc_directions: tuple[tuple[float, float], ...] | None = None

    @classmethod
    def circular(cls, n: int) -> "Layout":
        """Vertex v at angle 2*pi*v/n on the unit circle"""
        return cls(
            vertices=tuple(
                (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n)) for v in range(n)
            )
        )


@dataclass(frozen=True)
class RotationMap:
    """Graph with a cyclic order of outgoing arcs at every vertex

    Faces are None until the map has been traced.
    """

    graph: MultiGraph
    arcs: ArcSpace
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...] | None = None
    layout: Layout | None = None

    @property
    def is_traced(self) -> bool:
        return self.faces is not None

    def _traced_faces(self) -> tuple[Face, ...]:
        if self.faces is None:
            raise ConstructionError("Rotation map has not been traced")
        return self.faces

    @property
    def face_count(self) -> int:
        return len(self._traced_faces())

    @property
    def face_degrees(self) -> tuple[int, ...]:
        return tuple(face.degree for face in self._traced_faces())

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n_vertices - self.graph.edge_count + self.face_count

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    @cached_property
    def arc_face(self) -> tuple[int, ...]:
        """Face index of every arc"""
        owner = [-1] * len(self.arcs)
        for index, face in enumerate(self._traced_faces()):
            for arc in face.arcs:
                owner[arc] = index
        return tuple(owner)

    @cached_property
    def incidence(self) -> npt.NDArray[np.int64]:
        """alpha(v, f): number of arcs of face f with tail v"""
        faces = self._traced_faces()
        alpha = np.zeros((self.graph.n_vertices, len(faces)), dtype=np.int64)
        for index, face in enumerate(faces):
            for arc in face.arcs:
                alpha[self.arcs.tails[arc], index] += 1
        return alpha
