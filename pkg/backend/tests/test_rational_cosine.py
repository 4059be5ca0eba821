"""Tests for rational-cosine recognition and certification"""

import math
from fractions import Fraction

import pytest
import sympy

from qwalk.core.exceptions import ParameterError, RecognitionError, UnsupportedError
from qwalk.models.verdict import CosineCertificate, EvidenceGrade, RationalCosine
from qwalk.services.rational_cosine import (
    X,
    Y,
    certify,
    chebyshev_T,
    conway_jones_rational_combo,
    cosine_pair_solutions,
    is_rational_cosine_value,
    min_poly_2cos,
    recognize,
    spectral_period,
)

from .conftest import Analysis


@pytest.mark.parametrize(
    ("theta", "p", "q"),
    [
        (1.0, 0, 1),
        (-1.0, 1, 1),
        (0.5, 1, 3),
        (0.0, 1, 2),
        (math.cos(2 * math.pi / 7), 2, 7),
        (math.cos(3 * math.pi / 10), 3, 10),
    ],
)
def test_recognize(theta: float, p: int, q: int) -> None:
    """Cosines of rational angles are recognised with reduced p/q"""
    cert = recognize(theta, q_max=20)

    assert cert is not None
    assert (cert.pq.p, cert.pq.q) == (p, q)
    assert cert.grade == EvidenceGrade.NUMERIC_ONLY


@pytest.mark.parametrize("q", range(1, 65))
def test_recognize_round_trip(q: int) -> None:
    """Every reduced p/q with q <= 64 is recovered from its cosine"""
    for p in range(q + 1):
        if math.gcd(p, q) != 1:
            continue
        cert = recognize(math.cos(p * math.pi / q), q_max=64, tol=1e-10)

        assert cert is not None
        assert (cert.pq.p, cert.pq.q) == (p, q)


def test_recognize_gives_up_beyond_q_max() -> None:
    """No denominator up to q_max fits 0.3"""
    assert recognize(0.3, q_max=10) is None
    assert recognize(math.cos(math.pi / 23), q_max=20) is None


def test_recognize_rejects_non_cosines() -> None:
    """Values outside [-1, 1] and bad q_max are errors"""
    with pytest.raises(RecognitionError):
        recognize(1.5, q_max=10)
    with pytest.raises(ParameterError):
        recognize(0.5, q_max=0)


def test_recognize_upgrades_with_exact_context(cycle6: Analysis) -> None:
    """A divisor of the exact polynomial makes the evidence exact"""
    _, spec, _ = cycle6
    cert = recognize(0.5, q_max=10, exact_context=spec.charpoly)

    assert cert is not None
    assert cert.grade == EvidenceGrade.EXACT


def test_certify(cycle6: Analysis) -> None:
    """cos(pi/5) divides 4x^2 - 2x - 1 but not the C_6 polynomial"""
    _, spec, _ = cycle6
    golden = sympy.Poly(4 * X**2 - 2 * X - 1, X, domain=sympy.QQ)

    assert certify(RationalCosine(p=1, q=5), golden)
    assert spec.charpoly is not None
    assert not certify(RationalCosine(p=1, q=5), spec.charpoly)
    assert certify(RationalCosine(p=2, q=3), spec.charpoly)


@pytest.mark.parametrize(
    ("p", "q", "expr"),
    [
        (1, 3, Y - 1),
        (1, 2, Y),
        (1, 5, Y**2 - Y - 1),
        (2, 7, Y**3 + Y**2 - 2 * Y - 1),
    ],
)
def test_min_poly_2cos(p: int, q: int, expr: sympy.Expr) -> None:
    """Minimal polynomials of 2cos(p pi/q) are monic over the integers"""
    assert min_poly_2cos(p, q) == sympy.Poly(expr, Y)


def test_min_poly_needs_reduced_fraction() -> None:
    """p/q must be in lowest terms"""
    with pytest.raises(ParameterError):
        min_poly_2cos(2, 4)


def test_rational_cosine_validation() -> None:
    """0 <= p <= q with gcd 1"""
    with pytest.raises(ParameterError):
        RationalCosine(p=3, q=2)
    with pytest.raises(ParameterError):
        RationalCosine(p=2, q=6)


def test_period_denominators() -> None:
    """cos(p pi/q) = cos(2 pi r/s) with r/s = p/(2q) reduced"""
    angles = [(0, 1), (1, 1), (1, 3), (2, 3), (1, 5)]

    assert [RationalCosine(p=p, q=q).period_denominator for p, q in angles] == [1, 2, 6, 3, 10]


def test_spectral_period_of_cycle_spectrum() -> None:
    """The C_6 spectrum has period 6"""
    pqs = [RationalCosine(p=p, q=q) for p, q in [(0, 1), (1, 3), (2, 3), (1, 1)]]
    certificates = [
        CosineCertificate(theta=pq.value, pq=pq, grade=EvidenceGrade.EXACT, residual=0.0) for pq in pqs
    ]

    assert spectral_period(certificates) == 6
    assert spectral_period([]) == 1


def test_only_five_rational_cosine_values() -> None:
    """0, +-1/2 and +-1 are the rational values of rational-angle cosines"""
    assert is_rational_cosine_value(Fraction(-1, 2))
    assert not is_rational_cosine_value(Fraction(1, 3))


def test_rational_combinations_of_cosines() -> None:
    """cos(pi/5) - cos(2 pi/5) = 1/2 and single irrational cosines never are rational"""
    assert conway_jones_rational_combo([(1, (1, 5)), (-1, (2, 5))], Fraction(1, 2))
    assert conway_jones_rational_combo([(2, (1, 3)), (1, (1, 2))], 1)
    assert conway_jones_rational_combo([(1, (4, 5)), (-1, (3, 5))], Fraction(-1, 2))
    assert not conway_jones_rational_combo([(1, (1, 4))], 0)
    with pytest.raises(UnsupportedError):
        conway_jones_rational_combo([(1, (1, 3))] * 3, 0)


def test_cosine_pair_solutions() -> None:
    """All rational-angle solutions of c1 cos a + c2 cos b = target"""
    assert cosine_pair_solutions(1, 1, 1) == [
        (Fraction(0), Fraction(1, 2)),
        (Fraction(1, 3), Fraction(1, 3)),
        (Fraction(1, 2), Fraction(0)),
    ]
    assert cosine_pair_solutions(1, -1, Fraction(1, 2)) == [
        (Fraction(0), Fraction(1, 3)),
        (Fraction(1, 5), Fraction(2, 5)),
        (Fraction(1, 3), Fraction(1, 2)),
    ]
    with pytest.raises(ParameterError):
        cosine_pair_solutions(1, -1, 0)


def test_chebyshev_polynomials() -> None:
    """T_t(cos x) = cos(t x) and the recurrence stays exact"""
    assert chebyshev_T(3, Fraction(1, 2)) == Fraction(-1)
    assert chebyshev_T(6, 0.5) == pytest.approx(1.0)
    assert sympy.expand(chebyshev_T(4, X)) == 8 * X**4 - 8 * X**2 + 1
    assert chebyshev_T(0, Fraction(1, 3)) == 1
    with pytest.raises(ParameterError):
        chebyshev_T(-1, 0.5)
