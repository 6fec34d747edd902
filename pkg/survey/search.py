"""
Naive rational point search on E_n : y^2 = x^3 - 2 + 7n
"""
import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from sympy import integer_nthroot
from sympy.ntheory.primetest import is_square

from config import DEFAULT_HEIGHT
from curves.weierstrass import Curve, CurvePoint, is_torsion
from certifier.good import family_coefficient
from data.dataset import NAIVE_SEARCH, GeneratorRecord

logger = logging.getLogger(__name__)


def _lowest_u(a: int, d: int, bound: int) -> int:
    """Smallest u >= -bound that can make u^3 + a d^6 non-negative"""
    target = -a * d ** 6
    root, _ = integer_nthroot(abs(target), 3)
    lowest = root if target > 0 else -root - 1
    return max(-bound, lowest)


def naive_point_search(n: int, height: int = DEFAULT_HEIGHT) -> Optional[GeneratorRecord]:
    """
    First non-torsion point with x = u/d^2, y = s/d^3, gcd(u, d) = 1,
    |u| <= height * d^2 and d <= sqrt(height), in order of d then u.
    """
    if height < 1:
        raise ValueError(f"height bound must be positive, got {height}")
    a = family_coefficient(n)
    curve = Curve(0, a)
    for d in range(1, isqrt(height) + 1):
        bound = height * d * d
        d6 = d ** 6
        for u in range(_lowest_u(a, d, bound), bound + 1):
            rhs = u ** 3 + a * d6
            if rhs < 0 or gcd(u, d) != 1 or not is_square(rhs):
                continue
            P = CurvePoint(Fraction(u, d * d), Fraction(isqrt(rhs), d ** 3))
            if is_torsion(curve, P):
                continue
            logger.debug("n = %d: found (%s, %s)", n, P.x, P.y)
            return GeneratorRecord(n, P.x, P.y, NAIVE_SEARCH)
    logger.debug("n = %d: no point below height %d", n, height)
    return None
