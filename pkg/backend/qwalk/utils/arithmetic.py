"""Small exact-arithmetic helpers"""

import math
from fractions import Fraction


def rationalize(x: float, tol: float = 1e-12, max_denominator: int = 10**6) -> Fraction | None:
    """Nearest fraction with bounded denominator, or None if none is within tol"""
    if not math.isfinite(x):
        return None
    candidate = Fraction(x).limit_denominator(max_denominator)
    return candidate if abs(float(candidate) - x) <= tol else None


def signed_square(x: float, tol: float = 1e-12) -> Fraction | None:
    """sign(x) * x^2 as a fraction, if x^2 is (close to) rational"""
    square = rationalize(x * x, tol)
    if square is None:
        return None
    return -square if x < 0 else square
