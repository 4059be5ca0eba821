"""Reflection frames and two-reflection walks"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

import numpy as np
import numpy.typing as npt
import sympy

from qwalk.core.exceptions import UnsupportedExactError
from qwalk.models.embedding import RotationMap
from qwalk.models.graph import ArcSpace, MultiGraph

FloatMatrix = npt.NDArray[np.float64]

# Entry x stored exactly as sign(x) * x**2
SignedSquares = tuple[tuple[Fraction, ...], ...]


class WalkKind(str, Enum):
    ARC_REVERSAL = "arc-reversal"
    VERTEX_FACE = "vertex-face"
    SZEGEDY = "szegedy"
    GENERIC = "generic"


@dataclass(frozen=True, eq=False)
class ReflectionFrame:
    """Matrix with orthonormal columns; rows index the state basis"""

    matrix: FloatMatrix
    signed_squares: SignedSquares | None = None

    @property
    def shape(self) -> tuple[int, int]:
        rows, cols = self.matrix.shape
        return int(rows), int(cols)

    @property
    def has_exact(self) -> bool:
        return self.signed_squares is not None

    def reflection(self) -> FloatMatrix:
        """2 F F^T - I"""
        return 2.0 * self.matrix @ self.matrix.T - np.eye(self.shape[0])

    def exact_matrix(self) -> sympy.Matrix:
        """Entries as sign * sqrt(rational)"""
        if self.signed_squares is None:
            raise UnsupportedExactError("Frame has no rational squared entries")
        return sympy.Matrix(
            [
                [
                    (-1 if value < 0 else 1)
                    * sympy.sqrt(sympy.Rational(abs(value.numerator), value.denominator))
                    for value in row
                ]
                for row in self.signed_squares
            ]
        )


@dataclass(frozen=True, eq=False)
class TwoReflectionWalk:
    """U = (2MM^T - I)(2NN^T - I) with its discriminant and projected matrix"""

    kind: WalkKind
    N: ReflectionFrame
    M: ReflectionFrame
    graph: MultiGraph | None = None
    embedding: RotationMap | None = None
    arcs: ArcSpace | None = None

    @property
    def n_states(self) -> int:
        return self.N.shape[0]

    @property
    def dim(self) -> int:
        """|X|, the size of B"""
        return self.N.shape[1]

    @cached_property
    def U(self) -> FloatMatrix:
        return self.M.reflection() @ self.N.reflection()

    @cached_property
    def D(self) -> FloatMatrix:
        return self.N.matrix.T @ self.M.matrix

    @cached_property
    def B(self) -> FloatMatrix:
        B = 2.0 * self.D @ self.D.T - np.eye(self.dim)
        return (B + B.T) / 2.0
