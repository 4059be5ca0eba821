"""Service deciding peak, perfect and zero state transfer and periodicity"""

import math
from collections.abc import Mapping, Sequence
from dataclasses import replace

import numpy as np
import numpy.typing as npt

from qwalk.core.config import settings
from qwalk.core.exceptions import ParameterError, TransferInvariantError
from qwalk.core.executor import BatchRunner
from qwalk.core.logging import get_logger
from qwalk.models.spectral import SpectralData
from qwalk.models.verdict import (
    CosineCertificate,
    DecisionOptions,
    EvidenceGrade,
    GammaPolicy,
    MutualSupport,
    NoPeakReason,
    OracleCheck,
    TransferVerdict,
    VerdictKind,
)
from qwalk.models.walk import TwoReflectionWalk, WalkKind
from qwalk.services.rational_cosine import is_rational_cosine_value, recognize, spectral_period
from qwalk.services.walks import bt_columns, oracle_bt

logger = get_logger(__name__)

# Beyond this time the oracle falls back to the spectral sum
_RECURRENCE_MAX_TIME = 4096

# Numeric eigenvalues must sit this close to the exact roots
_ROOT_TOL = 1e-8

# Support entries below this multiple of support_tol are flagged as borderline
_BORDERLINE_FACTOR = 10.0

Recognition = CosineCertificate | NoPeakReason


def parity_holds(
    certificates: Mapping[int, CosineCertificate],
    support: MutualSupport,
    tau: int,
    gamma: int,
) -> bool:
    """tau*p/q is even on the gamma-signed support and odd on the rest"""
    same_sign = set(support.signed(gamma))
    for index, cert in certificates.items():
        odd = (tau * cert.pq.p // cert.pq.q) % 2 == 1
        if odd == (index in same_sign):
            return False
    return True


class TransferService:
    """Decision engine over the spectral data of B

    When a walk is supplied, verdicts are cross-checked against its time
    evolution; otherwise against the spectral sum.
    """

    def __init__(
        self,
        options: DecisionOptions | None = None,
        walk: TwoReflectionWalk | None = None,
    ) -> None:
        self.options = options or DecisionOptions.from_settings()
        self.walk = walk
        self._recognized: dict[tuple[SpectralData, int], Recognition] = {}

    def mutual_support(self, spec: SpectralData, u: int, v: int) -> MutualSupport:
        """Split the eigenvalues by the sign of E_theta(u, v)"""
        self._check_index(spec, u)
        self._check_index(spec, v)
        tol = self.options.support_tol
        entries = spec.entries(u, v)
        positive = tuple(i for i, x in enumerate(entries) if x > tol)
        negative = tuple(i for i, x in enumerate(entries) if x < -tol)
        borderline = tuple(i for i, x in enumerate(entries) if tol < abs(x) < _BORDERLINE_FACTOR * tol)
        if borderline:
            logger.warning(
                "Support entries close to the tolerance",
                u=u,
                v=v,
                eigenvalues=[spec.eigenvalues[i] for i in borderline],
                support_tol=tol,
            )
        return MutualSupport(
            u=u,
            v=v,
            positive=positive,
            negative=negative,
            entries=tuple(entries[i] for i in sorted(positive + negative)),
            borderline=borderline,
        )

    def strong_cospectral(self, spec: SpectralData, u: int, v: int, tol: float | None = None) -> bool:
        """E_theta e_u = +-E_theta e_v for every eigenvalue"""
        if u == v:
            raise ParameterError("Strong cospectrality needs distinct vertices", u=u)
        tol = self.options.oracle_tol if tol is None else tol
        for E in spec.idempotents:
            same = np.max(np.abs(E[:, u] - E[:, v]))
            opposite = np.max(np.abs(E[:, u] + E[:, v]))
            if min(same, opposite) > tol:
                return False
        return True

    def peak_bound_matrix(self, spec: SpectralData) -> npt.NDArray[np.float64]:
        """M(u, v) = sum over theta of |E_theta(u, v)|"""
        return sum((np.abs(E) for E in spec.idempotents), np.zeros((spec.dim, spec.dim)))

    def decide_pair(self, spec: SpectralData, u: int, v: int) -> TransferVerdict:
        """
        Decide peak state transfer from u to v.

        Args:
            spec: Spectral data of B
            u: Start vertex
            v: Target vertex, distinct from u

        Returns:
            ZeroST for an empty mutual support, NoPeak when an eigenvalue is
            not a recognized rational cosine or the parity test fails for every
            allowed gamma, otherwise PeakST (PerfectST when u, v are strongly
            cospectral) at the first time tau

        Raises:
            TransferInvariantError: a connected arc-reversal walk needs gamma = -1
        """
        if u == v:
            raise ParameterError("Pair transfer needs distinct vertices", u=u)
        support = self.mutual_support(spec, u, v)
        q_max = self.options.resolve_q_max(spec.dim)
        amount = support.bound

        if support.is_empty:
            verdict = TransferVerdict(
                u=u,
                v=v,
                kind=VerdictKind.ZERO,
                amount=0.0,
                grade=self._grade(spec, (), support),
                q_max=q_max,
            )
            logger.info("Decided pair", u=u, v=v, kind=verdict.kind.value)
            return verdict

        recognized = [self._recognize(spec, index, q_max) for index in support.support]
        failure = self._failure(recognized)
        if failure is not None:
            reason, certified = failure
            logger.info("Decided pair", u=u, v=v, kind=VerdictKind.NO_PEAK.value, reason=reason.value)
            return TransferVerdict(
                u=u,
                v=v,
                kind=VerdictKind.NO_PEAK,
                amount=amount,
                grade=EvidenceGrade.EXACT if certified and self._roots_agree(spec) else EvidenceGrade.NUMERIC_ONLY,
                reason=reason,
                certified=certified,
                q_max=q_max,
            )

        certs = tuple(c for c in recognized if isinstance(c, CosineCertificate))
        certificates = dict(zip(support.support, certs, strict=True))
        tau = math.lcm(*(cert.pq.q for cert in certs))

        for gamma in self.options.gamma_policy.candidates():
            if not parity_holds(certificates, support, tau, gamma):
                continue
            self._check_gamma(gamma)
            kind = VerdictKind.PERFECT if self.strong_cospectral(spec, u, v) else VerdictKind.PEAK
            verdict = TransferVerdict(
                u=u,
                v=v,
                kind=kind,
                amount=amount,
                tau=tau,
                gamma=gamma,
                certificates=certs,
                grade=self._grade(spec, certs, support),
                q_max=q_max,
            )
            verdict = self._attach_pair_oracle(spec, verdict, support)
            logger.info("Decided pair", u=u, v=v, kind=kind.value, tau=tau, gamma=gamma, amount=amount)
            return verdict

        all_exact = all(cert.grade == EvidenceGrade.EXACT for cert in certs)
        logger.info("Decided pair", u=u, v=v, kind=VerdictKind.NO_PEAK.value, reason="parity")
        return TransferVerdict(
            u=u,
            v=v,
            kind=VerdictKind.NO_PEAK,
            amount=amount,
            tau=tau,
            certificates=certs,
            grade=EvidenceGrade.EXACT if all_exact and self._roots_agree(spec) else EvidenceGrade.NUMERIC_ONLY,
            reason=NoPeakReason.PARITY,
            certified=all_exact,
            q_max=q_max,
        )

    def decide_periodicity(self, spec: SpectralData, u: int) -> TransferVerdict:
        """
        Decide periodicity at u.

        The period is tau = lcm q(theta) over the eigenvalue support of u when
        tau*p/q has the same parity for every theta, and 2*tau otherwise.
        """
        self._check_index(spec, u)
        tol = self.options.support_tol
        entries = spec.entries(u, u)
        support_indices = tuple(i for i, x in enumerate(entries) if x > tol)
        support = MutualSupport(
            u=u,
            v=u,
            positive=support_indices,
            negative=(),
            entries=tuple(entries[i] for i in support_indices),
        )
        q_max = self.options.resolve_q_max(spec.dim)

        recognized = [self._recognize(spec, index, q_max) for index in support_indices]
        failure = self._failure(recognized)
        if failure is not None:
            reason, certified = failure
            logger.info("Decided periodicity", u=u, kind=VerdictKind.NO_PEAK.value, reason=reason.value)
            return TransferVerdict(
                u=u,
                v=u,
                kind=VerdictKind.NO_PEAK,
                amount=support.bound,
                grade=EvidenceGrade.EXACT if certified and self._roots_agree(spec) else EvidenceGrade.NUMERIC_ONLY,
                reason=reason,
                certified=certified,
                q_max=q_max,
            )

        certs = tuple(c for c in recognized if isinstance(c, CosineCertificate))
        tau = math.lcm(*(cert.pq.q for cert in certs))
        parities = {(tau * cert.pq.p // cert.pq.q) % 2 for cert in certs}
        if len(parities) == 1:
            period, gamma = tau, (1 if parities == {0} else -1)
        else:
            period, gamma = 2 * tau, 1

        if self.walk is not None and self.walk.kind in (WalkKind.ARC_REVERSAL, WalkKind.VERTEX_FACE):
            expected = spectral_period(certs)
            if gamma != 1 or period != expected:
                raise TransferInvariantError(
                    "Arc-reversal and vertex-face walks return with phase 1 at lcm s(theta)",
                    u=u,
                    period=period,
                    gamma=gamma,
                    expected=expected,
                )

        verdict = TransferVerdict(
            u=u,
            v=u,
            kind=VerdictKind.PERIODIC,
            amount=support.bound,
            tau=period,
            gamma=gamma,
            certificates=certs,
            grade=self._grade(spec, certs, support),
            q_max=q_max,
        )
        verdict = self._attach_periodicity_oracle(spec, verdict)
        logger.info("Decided periodicity", u=u, kind=verdict.kind.value, period=period, gamma=gamma)
        return verdict

    def decide_all(
        self,
        spec: SpectralData,
        pairs: Sequence[tuple[int, int]],
        vertices: Sequence[int] = (),
        jobs: int | None = None,
    ) -> list[TransferVerdict]:
        """Pair verdicts in order, followed by periodicity verdicts for vertices"""
        runner = BatchRunner(jobs or settings.JOBS)
        for index in range(len(spec)):
            self._recognize(spec, index, self.options.resolve_q_max(spec.dim))
        verdicts = runner.map(lambda pair: self.decide_pair(spec, pair[0], pair[1]), list(pairs))
        verdicts.extend(runner.map(lambda u: self.decide_periodicity(spec, u), list(vertices)))
        return verdicts

    def _check_index(self, spec: SpectralData, u: int) -> None:
        if not 0 <= u < spec.dim:
            raise ParameterError("Vertex index out of range", vertex=u, dim=spec.dim)

    def _recognize(self, spec: SpectralData, index: int, q_max: int) -> Recognition:
        """Certificate for one eigenvalue, or the reason it has none"""
        key = (spec, index)
        cached = self._recognized.get(key)
        if cached is not None:
            return cached

        theta = spec.eigenvalues[index]
        result: Recognition
        rational = next(
            (root for root in spec.rational_roots if abs(float(root) - theta) <= self.options.cosine_tol),
            None,
        )
        if rational is not None and not is_rational_cosine_value(rational):
            result = NoPeakReason.RATIONAL_NON_COSINE
        else:
            certificate = recognize(theta, q_max, self.options.cosine_tol, exact_context=spec.charpoly)
            if certificate is None:
                result = NoPeakReason.UNRECOGNIZED
            else:
                result = certificate
                if spec.charpoly is not None and certificate.grade == EvidenceGrade.NUMERIC_ONLY:
                    logger.warning(
                        "Cosine not confirmed by the exact polynomial",
                        theta=theta,
                        p=certificate.pq.p,
                        q=certificate.pq.q,
                    )

        self._recognized[key] = result
        return result

    @staticmethod
    def _failure(recognized: Sequence[Recognition]) -> tuple[NoPeakReason, bool] | None:
        """First reason recognition failed, preferring certified ones"""
        if NoPeakReason.RATIONAL_NON_COSINE in recognized:
            return NoPeakReason.RATIONAL_NON_COSINE, True
        if NoPeakReason.UNRECOGNIZED in recognized:
            return NoPeakReason.UNRECOGNIZED, False
        return None

    def _check_gamma(self, gamma: int) -> None:
        walk = self.walk
        if (
            gamma == -1
            and self.options.gamma_policy == GammaPolicy.AUTO
            and walk is not None
            and walk.kind == WalkKind.ARC_REVERSAL
            and walk.graph is not None
            and walk.graph.is_connected()
        ):
            raise TransferInvariantError("Connected arc-reversal walks only transfer with gamma = 1")

    @staticmethod
    def _roots_agree(spec: SpectralData) -> bool:
        if spec.matches_charpoly(_ROOT_TOL):
            return True
        logger.warning("Numeric spectrum disagrees with the exact polynomial", root_tol=_ROOT_TOL)
        return False

    def _grade(
        self,
        spec: SpectralData,
        certs: Sequence[CosineCertificate],
        support: MutualSupport,
    ) -> EvidenceGrade:
        if spec.charpoly is None or support.borderline:
            return EvidenceGrade.NUMERIC_ONLY
        if not self._roots_agree(spec):
            return EvidenceGrade.NUMERIC_ONLY
        if any(cert.grade != EvidenceGrade.EXACT for cert in certs):
            return EvidenceGrade.NUMERIC_ONLY
        return EvidenceGrade.EXACT

    def _column(self, spec: SpectralData, u: int, t_max: int) -> tuple[npt.NDArray[np.float64], str]:
        """Rows of B_t e_u up to t_max (only t_max itself past the recurrence limit)"""
        if self.walk is not None and t_max <= _RECURRENCE_MAX_TIME:
            return bt_columns(self.walk, u, t_max), "chebyshev"
        times = np.arange(t_max + 1) if t_max <= _RECURRENCE_MAX_TIME else np.array([t_max])
        angles = np.arccos(np.clip(np.array(spec.eigenvalues), -1.0, 1.0))
        columns = np.stack([E[:, u] for E in spec.idempotents])
        return np.cos(np.outer(times, angles)) @ columns, "spectral"

    def _value_at(self, spec: SpectralData, u: int, v: int, t: int) -> tuple[float, str]:
        if self.options.oracle and self.walk is not None:
            return float(oracle_bt(self.walk, t)[u, v]), "dense"
        columns, method = self._column(spec, u, t)
        return float(columns[-1, v]), method

    def _attach_pair_oracle(
        self, spec: SpectralData, verdict: TransferVerdict, support: MutualSupport
    ) -> TransferVerdict:
        assert verdict.tau is not None and verdict.gamma is not None
        observed, method = self._value_at(spec, verdict.u, verdict.v, verdict.tau)
        expected = verdict.gamma * verdict.amount
        ok = abs(observed - expected) <= self.options.oracle_tol
        checked = verdict.with_oracle(
            OracleCheck(time=verdict.tau, expected=expected, observed=observed, ok=ok, method=method)
        )
        if not ok:
            logger.warning(
                "Oracle disagrees with verdict",
                u=verdict.u,
                v=verdict.v,
                tau=verdict.tau,
                expected=expected,
                observed=observed,
            )
            return replace(checked, grade=EvidenceGrade.NUMERIC_ONLY)
        if support.negative and not self._below_peak_at_double(spec, verdict, support):
            return replace(checked, grade=EvidenceGrade.NUMERIC_ONLY)
        return checked

    def _below_peak_at_double(
        self, spec: SpectralData, verdict: TransferVerdict, support: MutualSupport
    ) -> bool:
        """At 2*tau every T_t(theta) is 1, so B_2tau(u, v) is the signed sum of the support"""
        assert verdict.tau is not None
        later, _ = self._value_at(spec, verdict.u, verdict.v, 2 * verdict.tau)
        signed_sum = float(sum(support.entries))
        if abs(later) < verdict.amount and abs(later - signed_sum) <= self.options.oracle_tol:
            return True
        logger.warning(
            "Walk reaches the peak amount again at twice the peak time",
            u=verdict.u,
            v=verdict.v,
            time=2 * verdict.tau,
            amount=verdict.amount,
            observed=later,
        )
        return False

    def _attach_periodicity_oracle(self, spec: SpectralData, verdict: TransferVerdict) -> TransferVerdict:
        assert verdict.tau is not None and verdict.gamma is not None
        period, u = verdict.tau, verdict.u
        tol = self.options.oracle_tol
        expected = float(verdict.gamma)
        if period <= _RECURRENCE_MAX_TIME and not self.options.oracle:
            columns, method = self._column(spec, u, period)
            diagonal = columns[:, u]
            observed = float(diagonal[period])
            # no earlier return to u
            ok = abs(observed - expected) <= tol and bool(np.all(np.abs(diagonal[1:period]) < 1 - tol))
        else:
            observed, method = self._value_at(spec, u, u, period)
            ok = abs(observed - expected) <= tol
        checked = verdict.with_oracle(
            OracleCheck(time=period, expected=expected, observed=observed, ok=ok, method=method)
        )
        if ok:
            return checked
        logger.warning("Oracle disagrees with periodicity", u=u, period=period, observed=observed)
        return replace(checked, grade=EvidenceGrade.NUMERIC_ONLY)
