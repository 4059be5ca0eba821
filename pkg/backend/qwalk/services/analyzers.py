"""Family-level analyzers: strongly regular graphs, designs, blow-ups and (4, n) grids"""

import math
from collections.abc import Sequence
from dataclasses import replace
from fractions import Fraction

import numpy as np
import numpy.typing as npt
import sympy

from qwalk.core.exceptions import DesignError, ParameterError
from qwalk.core.logging import get_logger
from qwalk.models.analysis import (
    BlowupPrediction,
    DesignVerdict,
    GridPeakCase,
    GridPeakSuite,
    SrgFamily,
    SrgVerdict,
)
from qwalk.models.graph import MultiGraph
from qwalk.models.params import DesignParams, SrgParams
from qwalk.models.spectral import SpectralData
from qwalk.models.verdict import (
    CosineCertificate,
    DecisionOptions,
    EvidenceGrade,
    MutualSupport,
    RationalCosine,
    TransferVerdict,
    VerdictKind,
)
from qwalk.models.walk import TwoReflectionWalk
from qwalk.services.embeddings import grid_vertex, toroidal_grid
from qwalk.services.families import blowup, blowup_vertex
from qwalk.services.graphs import design_incidence_graph, validate_design
from qwalk.services.rational_cosine import cosine_pair_solutions, is_rational_cosine_value
from qwalk.services.spectral import spectral_data
from qwalk.services.transfer_service import TransferService, parity_holds
from qwalk.services.walks import arc_reversal_walk, vertex_face_walk

logger = get_logger(__name__)

FloatMatrix = npt.NDArray[np.float64]

# cos(p*pi/q) for the rational cosine values
_RATIONAL_COSINES: dict[Fraction, RationalCosine] = {
    Fraction(1): RationalCosine(0, 1),
    Fraction(1, 2): RationalCosine(1, 3),
    Fraction(0): RationalCosine(1, 2),
    Fraction(-1, 2): RationalCosine(2, 3),
    Fraction(-1): RationalCosine(1, 1),
}

_IDEMPOTENT_TOL = 1e-9


def _analysis(
    walk: TwoReflectionWalk, options: DecisionOptions | None
) -> tuple[SpectralData, TransferService]:
    service = TransferService(options, walk=walk)
    return spectral_data(walk, exact=service.options.exact, cluster_tol=service.options.cluster_tol), service


def srg_idempotent_coefficients(params: SrgParams) -> dict[str, tuple[sympy.Expr, sympy.Expr, sympy.Expr]]:
    """
    Coefficient vectors q with E = (1/n) * sum_j q(j) A_j.

    A_0 = I, A_1 = A and A_2 = J - I - A are the distance matrices.
    """
    n, k = params.n, params.k
    theta, tau = params.eigenvalues()
    m_theta, m_tau = params.multiplicities()
    gap = theta - tau
    one = sympy.Integer(1)
    return {
        "k": (one, one, one),
        "theta": (
            sympy.Rational(m_theta.numerator, m_theta.denominator),
            sympy.simplify((n - k + tau) / gap),
            sympy.simplify((tau - k) / gap),
        ),
        "tau": (
            sympy.Rational(m_tau.numerator, m_tau.denominator),
            sympy.simplify((k - n - theta) / gap),
            sympy.simplify((k - theta) / gap),
        ),
    }


def _primitive_parity(params: SrgParams, ratios: tuple[Fraction, Fraction]) -> tuple[bool, list[str]]:
    """Exact peak test for a primitive SRG whose eigenvalue ratios are rational cosines"""
    coefficients = srg_idempotent_coefficients(params)
    values = (Fraction(1), *ratios)
    notes: list[str] = []
    for distance in (1, 2):
        entries = tuple(
            float(coefficients[key][distance]) / params.n for key in ("k", "theta", "tau")
        )
        support = MutualSupport(
            u=0,
            v=distance,
            positive=tuple(i for i, x in enumerate(entries) if x > 0),
            negative=tuple(i for i, x in enumerate(entries) if x < 0),
            entries=entries,
        )
        certificates = {
            i: CosineCertificate(
                theta=float(values[i]),
                pq=_RATIONAL_COSINES[values[i]],
                grade=EvidenceGrade.EXACT,
                residual=0.0,
            )
            for i in support.support
        }
        tau = math.lcm(*(cert.pq.q for cert in certificates.values()))
        for gamma in (1, -1):
            if parity_holds(certificates, support, tau, gamma):
                notes.append(f"distance {distance}: parity holds at time {tau} with gamma {gamma}")
                return True, notes
        notes.append(f"distance {distance}: parity fails at time {tau}")
    return False, notes


def srg_analyze(
    params: SrgParams,
    instance: MultiGraph | None = None,
    options: DecisionOptions | None = None,
) -> SrgVerdict:
    """
    Decide peak state transfer in the arc-reversal walk from SRG parameters alone.

    Args:
        params: Feasible (n, k, a, c)
        instance: Concrete graph with these parameters to cross-check against
        options: Decision options for the cross-check

    Raises:
        InfeasibleParametersError: parameters fail the feasibility conditions
    """
    params.check_feasible()
    n, k = params.n, params.k
    reasoning: list[str] = []
    case: str | None = None

    if params.is_disconnected:
        family = SrgFamily.DISCONNECTED
        reasoning.append(f"c = 0: disjoint union of {n // (k + 1)} copies of K_{k + 1}")
        peak = k == 1
        reasoning.append("K_2 is the only complete graph with peak transfer")
        case = "a" if peak else None
    elif params.complement_disconnected:
        family = SrgFamily.COMPLETE_MULTIPARTITE
        parts = n // (n - k)
        reasoning.append(f"complement disconnected: complete multipartite with {parts} parts of size {n - k}")
        peak = parts in (2, 3)
        reasoning.append("blow-ups of K_2 and K_3 are the only periodic complete multipartite graphs")
        case = {2: "b", 3: "c"}.get(parts) if peak else None
    elif params.is_conference:
        family = SrgFamily.CONFERENCE
        target = Fraction(2, n - 1)
        solutions = [
            (alpha, beta)
            for gamma in (1, -1)
            for alpha, beta in cosine_pair_solutions(1, gamma, target)
            if alpha < Fraction(1, 2) and beta > 0
        ]
        reasoning.append(
            f"conference graph: cos(alpha) +- cos(beta) = {target} has {len(solutions)} rational solutions"
        )
        if solutions:
            reasoning.append("solutions force n in {3, 5}; the 5-cycle has no peak transfer")
        peak = False
    else:
        family = SrgFamily.PRIMITIVE
        theta, tau = params.eigenvalues()
        ratios = (Fraction(int(theta), k), Fraction(int(tau), k))
        reasoning.append(f"B eigenvalues 1, {ratios[0]}, {ratios[1]}; every idempotent entry is nonzero")
        if not all(is_rational_cosine_value(r) for r in ratios):
            reasoning.append("a rational eigenvalue outside {0, +-1/2, +-1} is not a rational cosine")
            peak = False
        else:
            peak, notes = _primitive_parity(params, ratios)
            reasoning.extend(notes)

    instance_agrees = None
    if instance is not None:
        instance_agrees = _srg_instance_agrees(params, instance, peak, options)
        reasoning.append(f"instance cross-check {'agrees' if instance_agrees else 'DISAGREES'}")

    verdict = SrgVerdict(
        params=params,
        family=family,
        peak=peak,
        case=case,
        reasoning=tuple(reasoning),
        instance_agrees=instance_agrees,
    )
    logger.info("Analyzed SRG parameters", n=n, k=k, a=params.a, c=params.c, family=family.value, peak=peak)
    return verdict


def _srg_instance_agrees(
    params: SrgParams, instance: MultiGraph, peak: bool, options: DecisionOptions | None
) -> bool:
    if instance.n_vertices != params.n or any(instance.degree(v) != params.k for v in range(params.n)):
        raise ParameterError("Instance does not match the SRG parameters", n=instance.n_vertices)
    spec, service = _analysis(arc_reversal_walk(instance), options)
    verdicts = [service.decide_pair(spec, 0, v) for v in range(1, params.n)]
    return any(verdict.is_peak for verdict in verdicts) == peak


def design_idempotents(
    params: DesignParams, incidence: npt.NDArray[np.int64]
) -> list[tuple[float, FloatMatrix]]:
    """
    Closed-form idempotents of the point-block incidence graph walk.

    Returns:
        (eigenvalue of B, idempotent) in descending eigenvalue order; the
        eigenvalue 0 only appears when v < b
    """
    v, b, r, k, lam = params.v, params.b, params.r, params.k, params.lam
    N = np.asarray(incidence, dtype=float)
    if N.shape != (v, b):
        raise DesignError("Incidence matrix has the wrong shape", shape=tuple(N.shape), expected=(v, b))
    small, large = math.sqrt(r - lam), math.sqrt(r * k)
    NtN = N.T @ N
    I_v, I_b = np.eye(v), np.eye(b)
    J_vv, J_vb, J_bb = np.ones((v, v)), np.ones((v, b)), np.ones((b, b))

    def block(top_left: FloatMatrix, top_right: FloatMatrix, bottom_right: FloatMatrix) -> FloatMatrix:
        return np.block([[top_left, top_right], [top_right.T, bottom_right]])

    result = []
    for sign in (1, -1):
        result.append(
            (
                sign * 1.0,
                0.5 * block(J_vv / v, sign * k / (v * large) * J_vb, J_bb / b),
            )
        )
        result.append(
            (
                sign * small / large,
                0.5
                * block(
                    I_v - J_vv / v,
                    sign * (N - k / v * J_vb) / small,
                    (NtN - r * k / b * J_bb) / (r - lam),
                ),
            )
        )
    if v < b:
        zero = np.zeros((v + b, v + b))
        zero[v:, v:] = I_b - (NtN - lam * v / b * J_bb) / (r - lam)
        result.append((0.0, zero))
    return sorted(result, key=lambda item: -item[0])


def _incidence_matrix(v: int, blocks: Sequence[Sequence[int]]) -> npt.NDArray[np.int64]:
    N = np.zeros((v, len(blocks)), dtype=np.int64)
    for j, block in enumerate(blocks):
        for point in block:
            N[int(point), j] = 1
    return N


def design_analyze(
    params: DesignParams,
    blocks: Sequence[Sequence[int]] | None = None,
    options: DecisionOptions | None = None,
) -> DesignVerdict:
    """
    Decide peak state transfer from a point of a 2-design.

    A point transfers iff (r - lambda)/(rk) = 1/4, i.e. (v, k) is (3, 2) or
    (9, 3), and then at time 3 to the blocks it is not incident with. With
    blocks supplied the incidence graph is built, decided from point 0 and
    compared against the closed-form idempotents.

    Raises:
        DesignError: params violate the design relations or disagree with blocks
    """
    params.check_relations()
    ratio = params.point_ratio
    reasoning = [f"(r - lambda)/(rk) = {ratio}"]
    peak = ratio == Fraction(1, 4)
    if peak:
        reasoning.append("sqrt of the ratio is cos(pi/3): supports {+-1, +-1/2} give time 3")
    else:
        reasoning.append("sqrt of the ratio is a rational cosine only when the ratio is 1/4")
    tau = 3 if peak else None

    point_verdicts: tuple[TransferVerdict, ...] = ()
    verified = None
    if blocks is not None:
        found = validate_design(params.v, blocks)
        if found != params:
            raise DesignError("Blocks do not realize the given parameters", found=str(found))
        graph = design_incidence_graph(params.v, blocks)
        spec, service = _analysis(arc_reversal_walk(graph), options)
        point_verdicts = tuple(service.decide_pair(spec, 0, y) for y in range(1, graph.n_vertices))
        verified = _idempotents_match(spec, design_idempotents(params, _incidence_matrix(params.v, blocks)))
        reasoning.append(f"closed-form idempotents {'match' if verified else 'DO NOT match'}")

    verdict = DesignVerdict(
        params=params,
        peak=peak,
        ratio=ratio,
        reasoning=tuple(reasoning),
        tau=tau,
        point_verdicts=point_verdicts,
        idempotents_verified=verified,
    )
    logger.info("Analyzed design", v=params.v, k=params.k, lam=params.lam, peak=peak)
    return verdict


def _idempotents_match(spec: SpectralData, closed_form: list[tuple[float, FloatMatrix]]) -> bool:
    if len(closed_form) != len(spec):
        return False
    for (theta, E), (expected_theta, expected) in zip(
        zip(spec.eigenvalues, spec.idempotents, strict=True), closed_form, strict=True
    ):
        if abs(theta - expected_theta) > _IDEMPOTENT_TOL:
            return False
        if float(np.max(np.abs(E - expected))) > _IDEMPOTENT_TOL:
            return False
    return True


def _split_angle(pq: RationalCosine) -> tuple[int, int]:
    """(r, s) with cos(p*pi/q) = cos(2*pi*r/s)"""
    half = Fraction(pq.p, 2 * pq.q)
    return half.numerator, half.denominator


def blowup_predict(
    base_verdicts: Sequence[TransferVerdict],
    m: int,
    base_spec: SpectralData | None = None,
    zero_tol: float = 1e-9,
) -> list[BlowupPrediction]:
    """
    Predict verdicts in G[K_m complement] from verdicts on G.

    A pair verdict u -> v carries over to (u, 0) -> (v, 1) at the same time
    with amount divided by m. A period tau at u gives period lcm(tau, 4) at
    (u, 0), and a peak (u, 0) -> (u, 1) at half that period iff 4 does not
    divide tau, or tau = 4 mod 8 and tau*r/s is even for every nonzero theta
    in the support of u. Periodicity verdicts must come from a connected base.

    Args:
        base_verdicts: Pair verdicts (u != v) and periodicity verdicts (u == v)
        m: Coclique size, at least 2
        base_spec: Spectral data of G, used for the (u, 0) -> (u, 1) amount
    """
    if m <= 1:
        raise ParameterError("Blow-up size must be at least 2", m=m)
    predictions: list[BlowupPrediction] = []
    for verdict in base_verdicts:
        u, v = verdict.u, verdict.v
        if u != v:
            kind = VerdictKind.PEAK if verdict.kind == VerdictKind.PERFECT else verdict.kind
            predictions.append(
                BlowupPrediction(u=u, a=0, v=v, b=1, kind=kind, tau=verdict.tau, amount=verdict.amount / m)
            )
            continue

        amount = None
        if base_spec is not None:
            zero_weight = sum(
                E[u, u]
                for theta, E in zip(base_spec.eigenvalues, base_spec.idempotents, strict=True)
                if abs(theta) < zero_tol
            )
            amount = 2.0 * (1.0 - float(zero_weight)) / m

        if verdict.kind != VerdictKind.PERIODIC or verdict.tau is None:
            predictions.append(
                BlowupPrediction(u=u, a=0, v=u, b=0, kind=VerdictKind.NO_PEAK, tau=None, amount=None)
            )
            predictions.append(
                BlowupPrediction(u=u, a=0, v=u, b=1, kind=VerdictKind.NO_PEAK, tau=None, amount=amount)
            )
            continue

        tau = verdict.tau
        period = math.lcm(tau, 4)
        predictions.append(
            BlowupPrediction(u=u, a=0, v=u, b=0, kind=VerdictKind.PERIODIC, tau=period, amount=None)
        )

        nonzero = [cert for cert in verdict.certificates if cert.pq != RationalCosine(1, 2)]
        even = all((tau * r // s) % 2 == 0 for r, s in (_split_angle(cert.pq) for cert in nonzero))
        peak = tau % 4 != 0 or (tau % 8 == 4 and even)
        predictions.append(
            BlowupPrediction(
                u=u,
                a=0,
                v=u,
                b=1,
                kind=VerdictKind.PEAK if peak else VerdictKind.NO_PEAK,
                tau=period // 2 if peak else None,
                amount=amount,
            )
        )
    return predictions


def blowup_check(
    base: MultiGraph,
    m: int,
    pairs: Sequence[tuple[int, int]] | None = None,
    options: DecisionOptions | None = None,
) -> list[BlowupPrediction]:
    """Predict the blow-up from G and confirm each prediction on G[K_m complement]"""
    if m <= 1:
        raise ParameterError("Blow-up size must be at least 2", m=m)
    if not base.is_connected() or base.n_vertices < 2:
        raise ParameterError("Blow-up periodicity needs a connected base with at least 2 vertices")

    spec, service = _analysis(arc_reversal_walk(base), options)
    chosen = list(pairs) if pairs is not None else [
        (u, v) for u in range(base.n_vertices) for v in range(base.n_vertices) if u != v
    ]
    base_verdicts = service.decide_all(spec, chosen, vertices=range(base.n_vertices))
    predictions = blowup_predict(base_verdicts, m, base_spec=spec)

    blown_spec, blown_service = _analysis(arc_reversal_walk(blowup(base, m)), options)
    checked = []
    for prediction in predictions:
        source = blowup_vertex(prediction.u, prediction.a, m)
        target = blowup_vertex(prediction.v, prediction.b, m)
        if source == target:
            observed = blown_service.decide_periodicity(blown_spec, source)
        else:
            observed = blown_service.decide_pair(blown_spec, source, target)
        checked.append(replace(prediction, observed=observed))
    logger.info(
        "Checked blow-up predictions",
        vertices=base.n_vertices,
        m=m,
        predictions=len(checked),
        agreeing=sum(bool(p.agrees) for p in checked),
    )
    return checked


def grid_peak_cases(n: int) -> list[GridPeakCase]:
    """Peaks of the (4, n) grid vertex-face walk from (0, 0)"""
    if n < 1:
        raise ParameterError("Grid size must be positive", n=n)
    cases: list[GridPeakCase] = []
    seen: set[tuple[int, int]] = set()

    def add(case: str, di: int, dj: int, time: int) -> None:
        target = (di % 4, dj % n)
        if target not in seen:
            seen.add(target)
            cases.append(GridPeakCase(case=case, source=(0, 0), target=target, time=time))

    if n % 2:
        for di in (1, -1):
            add("a", di, 0, n)
    else:
        half = n // 2
        for di in (1, -1):
            add("b", di, half, half)
        if n % 4 == 0:
            quarter = n // 4
            for di in (1, -1):
                for dj in (quarter, -quarter):
                    add("c", di, dj, quarter)
    return cases


def grid_peak_suite(n: int, options: DecisionOptions | None = None) -> GridPeakSuite:
    """Predicted (4, n) grid peaks, each confirmed by decide_pair"""
    cases = grid_peak_cases(n)
    spec, service = _analysis(vertex_face_walk(toroidal_grid(4, n)), options)
    source = grid_vertex(4, n, 0, 0)
    confirmed = tuple(
        GridPeakCase(
            case=case.case,
            source=case.source,
            target=case.target,
            time=case.time,
            verdict=service.decide_pair(spec, source, grid_vertex(4, n, *case.target)),
        )
        for case in cases
    )
    suite = GridPeakSuite(n=n, cases=confirmed)
    logger.info("Checked grid peaks", n=n, cases=len(confirmed), confirmed=suite.all_confirmed)
    return suite


def gnm_peak_amount(n: int, m: int) -> float:
    """Peak amount from u to w in the five-layer graph"""
    if n < 1 or m < 1:
        raise ParameterError("Layer sizes must be positive", n=n, m=m)
    return 2.0 * math.sqrt(n * m) / (n + m)
