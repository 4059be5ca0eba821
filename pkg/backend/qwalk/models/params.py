"""Strongly regular graph and block design parameter sets"""

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from qwalk.core.exceptions import DesignError, InfeasibleParametersError


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (n, k, a, c)

    a: common neighbours of adjacent vertices, c: of non-adjacent vertices.
    """

    n: int
    k: int
    a: int
    c: int

    def check_feasible(self) -> None:
        """Raise if the parameters cannot belong to a strongly regular graph"""
        n, k, a, c = self.n, self.k, self.a, self.c
        if not 0 < k < n - 1:
            raise InfeasibleParametersError("Need 0 < k < n - 1", n=n, k=k)
        if not (0 <= a < k and 0 <= c <= k):
            raise InfeasibleParametersError("Need 0 <= a < k and 0 <= c <= k", a=a, c=c, k=k)
        if k * (k - a - 1) != (n - k - 1) * c:
            raise InfeasibleParametersError("k(k - a - 1) must equal (n - k - 1)c", n=n, k=k, a=a, c=c)
        m_theta, m_tau = self.multiplicities()
        if m_theta.denominator != 1 or m_tau.denominator != 1 or m_theta < 0 or m_tau < 0:
            raise InfeasibleParametersError(
                "Eigenvalue multiplicities must be nonnegative integers",
                m_theta=str(m_theta),
                m_tau=str(m_tau),
            )

    @property
    def discriminant(self) -> int:
        return (self.a - self.c) ** 2 + 4 * (self.k - self.c)

    def eigenvalues(self) -> tuple[sympy.Expr, sympy.Expr]:
        """theta > tau, roots of x^2 - (a - c)x - (k - c)"""
        root = sympy.sqrt(self.discriminant)
        return (
            (sympy.Integer(self.a - self.c) + root) / 2,
            (sympy.Integer(self.a - self.c) - root) / 2,
        )

    def multiplicities(self) -> tuple[Fraction, Fraction]:
        n, k = self.n, self.k
        skew = 2 * k + (n - 1) * (self.a - self.c)
        if skew == 0:
            half = Fraction(n - 1, 2)
            return half, half
        root = math.isqrt(self.discriminant)
        if root * root != self.discriminant:
            raise InfeasibleParametersError(
                "Irrational eigenvalues require equal multiplicities", n=n, k=k, a=self.a, c=self.c
            )
        shift = Fraction(skew, root)
        return (Fraction(n - 1) - shift) / 2, (Fraction(n - 1) + shift) / 2

    @property
    def is_conference(self) -> bool:
        return 2 * self.k + (self.n - 1) * (self.a - self.c) == 0

    @property
    def is_disconnected(self) -> bool:
        return self.c == 0

    @property
    def complement_disconnected(self) -> bool:
        return self.complement().c == 0

    def complement(self) -> "SrgParams":
        n, k, a, c = self.n, self.k, self.a, self.c
        return SrgParams(n=n, k=n - k - 1, a=n - 2 - 2 * k + c, c=n - 2 * k + a)


@dataclass(frozen=True)
class DesignParams:
    """2-(v, k, lambda) design with b blocks, each point on r blocks"""

    v: int
    b: int
    r: int
    k: int
    lam: int

    def check_relations(self) -> None:
        v, b, r, k, lam = self.v, self.b, self.r, self.k, self.lam
        if not 1 < k < v:
            raise DesignError("Block size must satisfy 1 < k < v", k=k, v=v)
        if v * r != b * k:
            raise DesignError("vr must equal bk", v=v, r=r, b=b, k=k)
        if Fraction(v - 1, k - 1) != Fraction(r, lam):
            raise DesignError("(v - 1)/(k - 1) must equal r/lambda", v=v, k=k, r=r, lam=lam)
        if Fraction(v * (v - 1), k * (k - 1)) != Fraction(b, lam):
            raise DesignError("v(v - 1)/(k(k - 1)) must equal b/lambda", v=v, k=k, b=b, lam=lam)

    @property
    def point_ratio(self) -> Fraction:
        """(r - lambda)/(rk), the squared second eigenvalue of the incidence walk"""
        return Fraction(self.r - self.lam, self.r * self.k)
