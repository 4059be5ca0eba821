"""
Recognition of eigenvalues of the form cos(p*pi/q).

Numeric guesses come from the continued-fraction convergents of
arccos(theta)/pi; a guess is upgraded to exact evidence when the minimal
polynomial of 2cos(p*pi/q), rescaled to cos, divides an exact
characteristic polynomial.
"""

import math
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import TypeVar

import sympy

from qwalk.core.exceptions import ParameterError, RecognitionError, UnsupportedError
from qwalk.core.logging import get_logger
from qwalk.models.verdict import CosineCertificate, EvidenceGrade, RationalCosine

logger = get_logger(__name__)

X = sympy.Symbol("x")
Y = sympy.Symbol("y")

# Angles in [0, pi/2], as multiples of pi, whose cosine is rational
RATIONAL_COSINE_ANGLES: dict[Fraction, Fraction] = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(1, 2): Fraction(0),
}
RATIONAL_COSINE_VALUES = frozenset({Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)})

Scalar = TypeVar("Scalar", float, Fraction, sympy.Expr)


def chebyshev_T(t: int, x: Scalar) -> Scalar:
    """T_t(x) by T_{n+1} = 2x T_n - T_{n-1}; exact for Fraction and sympy input"""
    if t < 0:
        raise ParameterError("Chebyshev index must be nonnegative", t=t)
    previous, current = x * 0 + 1, x
    if t == 0:
        return previous
    for _ in range(t - 1):
        previous, current = current, 2 * x * current - previous
    return current


def _convergents(x: Fraction) -> Iterator[Fraction]:
    """Continued-fraction convergents of x >= 0 in increasing denominator"""
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    num, den = x.numerator, x.denominator
    while den:
        a, remainder = divmod(num, den)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield Fraction(h, k)
        num, den = den, remainder


def is_rational_cosine_value(value: Fraction) -> bool:
    """Rational numbers of the form cos(p*pi/q): only 0, +-1/2, +-1"""
    return value in RATIONAL_COSINE_VALUES


def recognize(
    theta: float,
    q_max: int,
    tol: float = 1e-9,
    exact_context: sympy.Poly | None = None,
) -> CosineCertificate | None:
    """
    Write theta as cos(p*pi/q) with q <= q_max.

    Args:
        theta: Value in [-1 - tol, 1 + tol]
        q_max: Largest denominator tried
        tol: Acceptance radius for |cos(p*pi/q) - theta|
        exact_context: Exact characteristic polynomial in x the value came from

    Returns:
        Certificate with NumericOnly evidence, upgraded to Exact when the
        minimal polynomial divides exact_context; None if no denominator up to
        q_max works (not a proof that theta is not a rational cosine)

    Raises:
        RecognitionError: theta outside [-1, 1] beyond tol
    """
    if q_max < 1:
        raise ParameterError("q_max must be positive", q_max=q_max)
    if not -1 - tol <= theta <= 1 + tol:
        raise RecognitionError("Value is not a cosine", theta=theta)
    clamped = min(1.0, max(-1.0, theta))
    angle = Fraction(math.acos(clamped) / math.pi)

    candidates = [c for c in _convergents(angle) if c.denominator <= q_max]
    candidates.append(angle.limit_denominator(q_max))
    for candidate in candidates:
        p, q = candidate.numerator, candidate.denominator
        if not 0 <= p <= q:
            continue
        residual = abs(math.cos(p * math.pi / q) - theta)
        if residual < tol:
            pq = RationalCosine(p=p, q=q)
            grade = EvidenceGrade.NUMERIC_ONLY
            if exact_context is not None and certify(pq, exact_context):
                grade = EvidenceGrade.EXACT
            return CosineCertificate(theta=theta, pq=pq, grade=grade, residual=residual)
    return None


@lru_cache(maxsize=512)
def min_poly_2cos(p: int, q: int) -> sympy.Poly:
    """Monic integer minimal polynomial (in y) of 2cos(p*pi/q)"""
    if q <= 0 or math.gcd(p, q) != 1:
        raise ParameterError("p and q must be coprime with q > 0", p=p, q=q)
    poly = sympy.minimal_polynomial(2 * sympy.cos(sympy.Rational(p, q) * sympy.pi), Y, polys=True)
    if poly.LC() < 0:
        poly = -poly
    return poly


@lru_cache(maxsize=512)
def _cos_factor(p: int, q: int) -> sympy.Poly:
    """Minimal polynomial of cos(p*pi/q) in x, obtained from y = 2x"""
    return sympy.Poly(min_poly_2cos(p, q).as_expr().subs(Y, 2 * X), X, domain=sympy.QQ)


def certify(pq: RationalCosine, charpoly: sympy.Poly) -> bool:
    """True when cos(p*pi/q) is an exact root of charpoly"""
    return bool(charpoly.rem(_cos_factor(pq.p, pq.q)).is_zero)


def spectral_period(certificates: Sequence[CosineCertificate]) -> int:
    """lcm of s with theta = cos(2*pi*r/s) over the certificates"""
    return math.lcm(*(cert.pq.period_denominator for cert in certificates)) if certificates else 1


def _fold(coef: Fraction, angle: Fraction) -> tuple[Fraction, Fraction]:
    """Rewrite coef*cos(angle*pi) with the angle in [0, 1/2]"""
    angle = angle % 2
    if angle > 1:
        angle = 2 - angle
    if angle > Fraction(1, 2):
        return -coef, 1 - angle
    return coef, angle


def conway_jones_rational_combo(
    pairs: Sequence[tuple[Fraction | int, tuple[int, int]]], target: Fraction | int
) -> bool:
    """
    Decide whether sum(coef * cos(p*pi/q)) equals a rational target.

    Uses the classification of rational combinations of at most two cosines
    of rational angles: each cosine is rational (angles 0, pi/3, pi/2 up to
    symmetry), or the two irrational cosines appear as a multiple of
    cos(pi/5) - cos(2*pi/5) = 1/2.

    Raises:
        UnsupportedError: more than two cosine terms
    """
    if len(pairs) > 2:
        raise UnsupportedError("Only combinations of at most two cosines are supported", terms=len(pairs))

    rational_part = Fraction(0)
    irrational: dict[Fraction, Fraction] = {}
    for coef, (p, q) in pairs:
        if q <= 0:
            raise ParameterError("Angle denominator must be positive", p=p, q=q)
        folded_coef, angle = _fold(Fraction(coef), Fraction(p, q))
        if angle in RATIONAL_COSINE_ANGLES:
            rational_part += folded_coef * RATIONAL_COSINE_ANGLES[angle]
        else:
            irrational[angle] = irrational.get(angle, Fraction(0)) + folded_coef
    irrational = {angle: coef for angle, coef in irrational.items() if coef != 0}

    if not irrational:
        return rational_part == Fraction(target)
    if len(irrational) == 1:
        return False
    first, second = Fraction(1, 5), Fraction(2, 5)
    if set(irrational) == {first, second} and irrational[first] == -irrational[second]:
        return rational_part + irrational[first] / 2 == Fraction(target)
    return False


def cosine_pair_solutions(
    c1: Fraction | int, c2: Fraction | int, target: Fraction | int
) -> list[tuple[Fraction, Fraction]]:
    """
    All (alpha, beta) in [0, 1/2]^2, as multiples of pi, with
    c1*cos(alpha*pi) + c2*cos(beta*pi) = target and both angles rational.
    """
    c1, c2, target = Fraction(c1), Fraction(c2), Fraction(target)
    if c1 == 0 or c2 == 0:
        raise ParameterError("Coefficients must be nonzero", c1=str(c1), c2=str(c2))
    if c1 == -c2 and target == 0:
        # alpha = beta is then a solution for every angle
        raise ParameterError("Equation has infinitely many solutions", c1=str(c1), c2=str(c2))

    solutions = [
        (alpha, beta)
        for alpha, cos_alpha in RATIONAL_COSINE_ANGLES.items()
        for beta, cos_beta in RATIONAL_COSINE_ANGLES.items()
        if c1 * cos_alpha + c2 * cos_beta == target
    ]
    first, second = Fraction(1, 5), Fraction(2, 5)
    if c1 == -c2:
        if c1 / 2 == target:
            solutions.append((first, second))
        if c2 / 2 == target:
            solutions.append((second, first))
    return sorted(solutions)
