"""Spectral decomposition results"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
import numpy.typing as npt
import sympy

FloatMatrix = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class SpectralData:
    """Distinct eigenvalues of B (descending) with their idempotents

    Idempotents are keyed by cluster index, not by float value.
    """

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    idempotents: tuple[FloatMatrix, ...]
    cluster_tol: float
    charpoly: sympy.Poly | None = None

    @property
    def dim(self) -> int:
        return int(self.idempotents[0].shape[0]) if self.idempotents else 0

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> FloatMatrix:
        return sum(
            (theta * E for theta, E in zip(self.eigenvalues, self.idempotents, strict=True)),
            np.zeros((self.dim, self.dim)),
        )

    def entries(self, u: int, v: int) -> tuple[float, ...]:
        return tuple(float(E[u, v]) for E in self.idempotents)

    @cached_property
    def rational_roots(self) -> tuple[Fraction, ...]:
        """Rational roots of the exact characteristic polynomial, if known"""
        if self.charpoly is None:
            return ()
        return tuple(
            Fraction(int(root.p), int(root.q)) for root in sorted(self.charpoly.ground_roots())
        )

    @cached_property
    def charpoly_roots(self) -> tuple[tuple[float, int], ...]:
        """Real roots of the exact characteristic polynomial with multiplicity, descending"""
        if self.charpoly is None:
            return ()
        roots: list[tuple[float, int]] = []
        for factor, multiplicity in self.charpoly.factor_list()[1]:
            coefficients = [float(c) for c in factor.all_coeffs()]
            roots.extend((float(root.real), multiplicity) for root in np.roots(coefficients))
        return tuple(sorted(roots, reverse=True))

    def matches_charpoly(self, tol: float) -> bool:
        """Clustered eigenvalues and multiplicities agree with the exact roots to tol"""
        if self.charpoly is None:
            return True
        exact = self.charpoly_roots
        if len(exact) != len(self.eigenvalues):
            return False
        return all(
            abs(root - theta) <= tol and count == multiplicity
            for (root, count), theta, multiplicity in zip(
                exact, self.eigenvalues, self.multiplicities, strict=True
            )
        )

    def charpoly_coefficients(self) -> list[str] | None:
        if self.charpoly is None:
            return None
        return [str(c) for c in self.charpoly.all_coeffs()]


@dataclass(frozen=True)
class TraceFilter:
    """Coefficient data of det(xI - U) for the vertex-face walk on a toroidal grid"""

    n: int
    m: int
    tr_U: Fraction
    tr_U2: Fraction
    c2: Fraction

    @property
    def integral(self) -> bool:
        return self.c2.denominator == 1
