"""
Formal group of y^2 = x^3 + Ax + B at the origin, in the parameter t = -x/y
Expansions of w = -1/y, the invariant differential and the formal logarithm
are computed once per (A, B, degree) with sympy ring series.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Tuple

from sympy import QQ
from sympy.polys.ring_series import rs_integrate, rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import ring

from curves.weierstrass import INFINITY, Curve, CurvePoint, group_law
from errors import ConsistencyFailure, NotInFormalGroup, PrecisionExhausted
from utils.helpers import horner

logger = logging.getLogger(__name__)

_R, _t = ring("t", QQ)


@dataclass(frozen=True)
class FormalPoint:
    """A point reducing to O, its parameter t = -x/y and level v(t)"""
    point: CurvePoint
    t: Any
    level: int


@dataclass(frozen=True)
class FormalGroup:
    A: Fraction
    B: Fraction
    degree: int
    w: Tuple[Fraction, ...]
    omega: Tuple[Fraction, ...]
    log: Tuple[Fraction, ...]


def _fractions(series, length: int) -> Tuple[Fraction, ...]:
    terms = dict(series.terms())
    out = []
    for k in range(length):
        c = terms.get((k,), QQ.zero)
        out.append(Fraction(int(QQ.numer(c)), int(QQ.denom(c))))
    return tuple(out)


def _qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


@lru_cache(maxsize=32)
def formal_group(A: Fraction, B: Fraction, degree: int) -> FormalGroup:
    """Expansions truncated after t^degree"""
    n = degree + 1
    a, b = _qq(A), _qq(B)
    # w = t^3 + A t w^2 + B w^3, solved by fixed-point iteration
    w = _t ** 3
    for _ in range(n):
        w2 = rs_mul(w, w, _t, n)
        nxt = rs_trunc(_t ** 3 + _t * w2 * a + rs_mul(w2, w, _t, n) * b, _t, n)
        if nxt == w:
            break
        w = nxt
    W = _R.from_dict({(k - 3,): c for (k,), c in w.terms()})
    omega = 1 + rs_mul(_t * W.diff(_t), rs_series_inversion(W, _t, n), _t, n) * QQ(1, 2)
    log = rs_integrate(omega, _t)
    logger.debug("formal group of y^2 = x^3 + %sx + %s expanded to degree %d", A, B, degree)
    return FormalGroup(
        Fraction(A), Fraction(B), degree, _fractions(w, n), _fractions(omega, n), _fractions(log, n + 1)
    )


def formal_group_for(base, curve: Curve) -> FormalGroup:
    return formal_group(Fraction(curve.A), Fraction(curve.B), base.e * base.precision + 4)


def _series(coefficients: Tuple[Fraction, ...], z):
    return horner(coefficients[::-1], z)


def formal_log(group: FormalGroup, t):
    return _series(group.log, t)


def formal_exp(group: FormalGroup, value):
    """Inverse of formal_log by Newton's method, for value of positive valuation"""
    s = value
    for step in range(64):
        residual = formal_log(group, s) - value
        if residual == 0:
            logger.debug("formal exp converged after %d steps", step)
            return s
        s = s - residual / _series(group.omega, s)
    raise PrecisionExhausted("formal exponential did not converge")


def point_from_parameter(group: FormalGroup, t) -> CurvePoint:
    """(x, y) = (t/w(t), -1/w(t))"""
    w = _series(group.w, t)
    return CurvePoint(t / w, -1 / w)


def formal_parameter(base, P: CurvePoint) -> FormalPoint:
    """t = -x/y for a point reducing to O, with its level"""
    if P.is_infinity:
        raise NotInFormalGroup("the parameter of O is 0 and its level is unbounded")
    if base.is_zero(P.x) or base.valuation(P.x) >= 0:
        raise NotInFormalGroup("point does not reduce to O")
    t = -P.x / P.y
    level = base.valuation(t)
    if base.valuation(P.x) != -2 * level:
        raise ConsistencyFailure(f"v(x) = {base.valuation(P.x)} but level is {level}")
    return FormalPoint(P, t, level)


def formal_add(base, curve: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """P + Q for two points of the formal group, through log and exp"""
    group = formal_group_for(base, curve)
    total = formal_log(group, -P.x / P.y) + formal_log(group, -Q.x / Q.y)
    if total == 0:
        return INFINITY
    return point_from_parameter(group, formal_exp(group, total))


def _in_formal_group(base, P: CurvePoint) -> bool:
    return not P.is_infinity and not base.is_zero(P.x) and base.valuation(P.x) < 0


def local_add(base, curve: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Group law over a local base, switching to the formal chart near O"""
    try:
        return group_law(curve, P, Q)
    except PrecisionExhausted:
        if base.e != 1 or not (_in_formal_group(base, P) and _in_formal_group(base, Q)):
            raise
        logger.debug("affine slope lost all precision; adding in the formal chart")
        return formal_add(base, curve, P, Q)
