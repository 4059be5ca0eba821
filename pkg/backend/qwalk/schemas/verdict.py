"""Pydantic schemas for verdicts, spectra and reports"""

from typing import Any

from pydantic import BaseModel, Field

from qwalk.models.spectral import SpectralData
from qwalk.models.verdict import (
    CosineCertificate,
    EvidenceGrade,
    NoPeakReason,
    OracleCheck,
    RationalCosine,
    TransferVerdict,
    VerdictKind,
)


class CertificateSchema(BaseModel):
    theta: float
    p: int
    q: int
    evidence: EvidenceGrade

    @classmethod
    def from_domain(cls, cert: CosineCertificate) -> "CertificateSchema":
        return cls(theta=cert.theta, p=cert.pq.p, q=cert.pq.q, evidence=cert.grade)

    def to_domain(self) -> CosineCertificate:
        pq = RationalCosine(p=self.p, q=self.q)
        residual = abs(pq.value - self.theta)
        return CosineCertificate(theta=self.theta, pq=pq, grade=self.evidence, residual=residual)


class OracleSummary(BaseModel):
    time: int
    expected: float
    observed: float
    ok: bool
    method: str

    @classmethod
    def from_domain(cls, check: OracleCheck) -> "OracleSummary":
        return cls(
            time=check.time,
            expected=check.expected,
            observed=check.observed,
            ok=check.ok,
            method=check.method,
        )


class VerdictSchema(BaseModel):
    """Verdict for a pair (u, v), or periodicity when u == v"""

    pair: tuple[int, int]
    kind: VerdictKind
    tau: str | None = Field(None, description="First transfer time or period, as an integer string")
    gamma: int | None = None
    amount: float
    certificates: list[CertificateSchema] = Field(default_factory=list)
    grade: EvidenceGrade
    reason: NoPeakReason | None = None
    certified: bool = False
    q_max: int | None = None
    oracle: OracleSummary | None = None

    @classmethod
    def from_domain(cls, verdict: TransferVerdict) -> "VerdictSchema":
        return cls(
            pair=(verdict.u, verdict.v),
            kind=verdict.kind,
            tau=str(verdict.tau) if verdict.tau is not None else None,
            gamma=verdict.gamma,
            amount=verdict.amount,
            certificates=[CertificateSchema.from_domain(cert) for cert in verdict.certificates],
            grade=verdict.grade,
            reason=verdict.reason,
            certified=verdict.certified,
            q_max=verdict.q_max,
            oracle=OracleSummary.from_domain(verdict.oracle) if verdict.oracle is not None else None,
        )

    def to_domain(self) -> TransferVerdict:
        oracle = None
        if self.oracle is not None:
            oracle = OracleCheck(**self.oracle.model_dump())
        return TransferVerdict(
            u=self.pair[0],
            v=self.pair[1],
            kind=self.kind,
            amount=self.amount,
            tau=int(self.tau) if self.tau is not None else None,
            gamma=self.gamma,
            certificates=tuple(cert.to_domain() for cert in self.certificates),
            grade=self.grade,
            reason=self.reason,
            certified=self.certified,
            q_max=self.q_max,
            oracle=oracle,
        )

    def csv_row(self) -> dict[str, Any]:
        return {
            "u": self.pair[0],
            "v": self.pair[1],
            "kind": self.kind.value,
            "tau": self.tau or "",
            "gamma": "" if self.gamma is None else self.gamma,
            "amount": f"{self.amount:.12g}",
            "grade": self.grade.value,
            "reason": self.reason.value if self.reason is not None else "",
            "oracle_ok": "" if self.oracle is None else self.oracle.ok,
        }


class SpectrumSchema(BaseModel):
    eigenvalues: list[float]
    multiplicities: list[int]
    cluster_tol: float
    charpoly: list[str] | None = Field(None, description="Exact coefficients, highest degree first")
    idempotents: list[list[list[float]]] | None = None

    @classmethod
    def from_domain(cls, spec: SpectralData, include_idempotents: bool = False) -> "SpectrumSchema":
        return cls(
            eigenvalues=list(spec.eigenvalues),
            multiplicities=list(spec.multiplicities),
            cluster_tol=spec.cluster_tol,
            charpoly=spec.charpoly_coefficients(),
            idempotents=[E.tolist() for E in spec.idempotents] if include_idempotents else None,
        )


class OracleReport(BaseModel):
    checked: int = 0
    failed: int = 0

    @classmethod
    def from_verdicts(cls, verdicts: list[TransferVerdict]) -> "OracleReport":
        checks = [v.oracle for v in verdicts if v.oracle is not None]
        return cls(checked=len(checks), failed=sum(not check.ok for check in checks))


class ReportSchema(BaseModel):
    """Analysis report; deterministic for a fixed input and flags"""

    tool: str
    version: str
    input_digest: str
    walk: str
    tolerances: dict[str, float]
    q_max: int
    spectrum: SpectrumSchema
    verdicts: list[VerdictSchema]
    oracle: OracleReport
