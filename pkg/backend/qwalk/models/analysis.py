"""Results of the family-level analyzers"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from qwalk.models.params import DesignParams, SrgParams
from qwalk.models.verdict import TransferVerdict, VerdictKind


class SrgFamily(str, Enum):
    DISCONNECTED = "disconnected"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    PRIMITIVE = "primitive"
    CONFERENCE = "conference"


@dataclass(frozen=True)
class SrgVerdict:
    params: SrgParams
    family: SrgFamily
    peak: bool
    case: str | None
    reasoning: tuple[str, ...]
    instance_agrees: bool | None = None

    def summary(self) -> str:
        if self.peak:
            return f"peak state transfer ({self.family.value}, case ({self.case}))"
        return f"no peak state transfer ({self.family.value})"


@dataclass(frozen=True)
class DesignVerdict:
    params: DesignParams
    peak: bool
    ratio: Fraction
    reasoning: tuple[str, ...]
    tau: int | None = None
    point_verdicts: tuple[TransferVerdict, ...] = ()
    idempotents_verified: bool | None = None

    @property
    def peak_targets(self) -> tuple[int, ...]:
        return tuple(verdict.v for verdict in self.point_verdicts if verdict.is_peak)

    def summary(self) -> str:
        head = f"({self.params.v},{self.params.k},{self.params.lam})"
        if not self.peak:
            return f"{head}: no peak state transfer from points (ratio {self.ratio})"
        if self.point_verdicts:
            targets = len(self.peak_targets)
            return f"{head}: peak from each point to its {targets} non-incident blocks at t={self.tau}"
        return f"{head}: peak from each point to its non-incident blocks at t={self.tau}"


@dataclass(frozen=True)
class BlowupPrediction:
    """Predicted verdict in G[K_m complement] for (u, a) -> (v, b)"""

    u: int
    a: int
    v: int
    b: int
    kind: VerdictKind
    tau: int | None
    amount: float | None
    observed: TransferVerdict | None = None

    @property
    def agrees(self) -> bool | None:
        if self.observed is None:
            return None
        if self.kind == VerdictKind.PERIODIC:
            return self.observed.kind == VerdictKind.PERIODIC and self.observed.tau == self.tau
        if self.kind in (VerdictKind.PEAK, VerdictKind.PERFECT):
            return self.observed.is_peak and self.observed.tau == self.tau
        return self.observed.kind == self.kind


@dataclass(frozen=True)
class GridPeakCase:
    """One peak predicted for the (4, n) toroidal grid"""

    case: str
    source: tuple[int, int]
    target: tuple[int, int]
    time: int
    verdict: TransferVerdict | None = None

    @property
    def confirmed(self) -> bool:
        return (
            self.verdict is not None and self.verdict.is_peak and self.verdict.tau == self.time
        )


@dataclass(frozen=True)
class GridPeakSuite:
    n: int
    cases: tuple[GridPeakCase, ...] = field(default_factory=tuple)

    @property
    def all_confirmed(self) -> bool:
        return all(case.confirmed for case in self.cases)
