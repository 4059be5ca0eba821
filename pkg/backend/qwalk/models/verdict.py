"""Transfer verdicts, rational cosines and decision options"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any

from qwalk.core.config import Settings, settings
from qwalk.core.exceptions import ParameterError


class VerdictKind(str, Enum):
    PERFECT = "PerfectST"
    PEAK = "PeakST"
    PERIODIC = "Periodic"
    ZERO = "ZeroST"
    NO_PEAK = "NoPeak"


class EvidenceGrade(str, Enum):
    EXACT = "Exact"
    NUMERIC_ONLY = "NumericOnly"


class NoPeakReason(str, Enum):
    UNRECOGNIZED = "unrecognized"
    RATIONAL_NON_COSINE = "rational_non_cosine"
    PARITY = "parity"


class GammaPolicy(str, Enum):
    AUTO = "auto"
    PLUS = "1"
    MINUS = "-1"

    def candidates(self) -> tuple[int, ...]:
        if self == GammaPolicy.PLUS:
            return (1,)
        if self == GammaPolicy.MINUS:
            return (-1,)
        return (1, -1)


@dataclass(frozen=True, order=True)
class RationalCosine:
    """cos(p*pi/q) with 0 <= p <= q and gcd(p, q) = 1"""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q <= 0 or not 0 <= self.p <= self.q:
            raise ParameterError("Need 0 <= p <= q and q > 0", p=self.p, q=self.q)
        if math.gcd(self.p, self.q) != 1:
            raise ParameterError("p and q must be coprime", p=self.p, q=self.q)

    @property
    def angle(self) -> Fraction:
        """The angle as a multiple of pi"""
        return Fraction(self.p, self.q)

    @property
    def value(self) -> float:
        return math.cos(self.p * math.pi / self.q)

    @property
    def period_denominator(self) -> int:
        """s with theta = cos(2*pi*r/s), r/s in lowest terms"""
        return (self.angle / 2).denominator


@dataclass(frozen=True)
class CosineCertificate:
    theta: float
    pq: RationalCosine
    grade: EvidenceGrade
    residual: float


@dataclass(frozen=True)
class MutualSupport:
    """Signed support of E_theta(u, v); indices refer to spectral clusters"""

    u: int
    v: int
    positive: tuple[int, ...]
    negative: tuple[int, ...]
    entries: tuple[float, ...]
    borderline: tuple[int, ...] = ()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.positive + self.negative))

    @property
    def is_empty(self) -> bool:
        return not self.positive and not self.negative

    @property
    def bound(self) -> float:
        return float(sum(abs(x) for x in self.entries))

    def signed(self, gamma: int) -> tuple[int, ...]:
        return self.positive if gamma == 1 else self.negative


@dataclass(frozen=True)
class OracleCheck:
    time: int
    expected: float
    observed: float
    ok: bool
    method: str = "chebyshev"


@dataclass(frozen=True)
class TransferVerdict:
    """Outcome of a pair or periodicity decision"""

    u: int
    v: int
    kind: VerdictKind
    amount: float
    tau: int | None = None
    gamma: int | None = None
    certificates: tuple[CosineCertificate, ...] = ()
    grade: EvidenceGrade = EvidenceGrade.NUMERIC_ONLY
    reason: NoPeakReason | None = None
    certified: bool = False
    q_max: int | None = None
    oracle: OracleCheck | None = None

    @property
    def is_peak(self) -> bool:
        return self.kind in (VerdictKind.PEAK, VerdictKind.PERFECT)

    def transfer_times(self, limit: int) -> list[int]:
        """Times up to limit at which the peak is attained (odd multiples of tau)"""
        if not self.is_peak or self.tau is None:
            return []
        return list(range(self.tau, limit + 1, 2 * self.tau))

    def with_oracle(self, oracle: OracleCheck) -> "TransferVerdict":
        return replace(self, oracle=oracle)


@dataclass(frozen=True)
class DecisionOptions:
    """Tolerances and policies for the decision engine"""

    q_max: int | None = None
    cosine_tol: float = 1e-9
    support_tol: float = 1e-9
    cluster_tol: float = 1e-9
    oracle_tol: float = 1e-7
    gamma_policy: GammaPolicy = GammaPolicy.AUTO
    exact: bool = True
    oracle: bool = False

    @classmethod
    def from_settings(cls, config: Settings = settings, **overrides: Any) -> "DecisionOptions":
        values: dict[str, Any] = {
            "cosine_tol": config.COSINE_TOL,
            "support_tol": config.SUPPORT_TOL,
            "cluster_tol": config.CLUSTER_TOL,
            "oracle_tol": config.ORACLE_TOL,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def resolve_q_max(self, dim: int, config: Settings = settings) -> int:
        return self.q_max if self.q_max is not None else config.default_q_max(dim)
