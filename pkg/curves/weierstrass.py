"""
Short Weierstrass curves y^2 = x^3 + Ax + B
Chord-tangent group law over any coefficient ring with field operations:
Fraction, FqElement, PadicNumber or LocalFieldElement coordinates.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from config import MAZUR_BOUND
from errors import PrecisionExhausted


@dataclass(frozen=True)
class Curve:
    """Coefficients are rationals; points may live in any ring they coerce into"""
    A: Any
    B: Any

    def rhs(self, x):
        return x * x * x + self.A * x + self.B

    @property
    def discriminant(self):
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def is_singular(self) -> bool:
        return 4 * self.A ** 3 + 27 * self.B ** 2 == 0


@dataclass(frozen=True)
class CurvePoint:
    """Affine point, or the point at infinity when x is None"""
    x: Any = None
    y: Any = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = CurvePoint()

AddLaw = Callable[[Curve, CurvePoint, CurvePoint], CurvePoint]


def on_curve(curve: Curve, P: CurvePoint) -> bool:
    if P.is_infinity:
        return True
    return P.y * P.y == curve.rhs(P.x)


def negate(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def _double(curve: Curve, P: CurvePoint) -> CurvePoint:
    slope = (3 * P.x * P.x + curve.A) / (2 * P.y)
    x3 = slope * slope - 2 * P.x
    return CurvePoint(x3, slope * (P.x - x3) - P.y)


def group_law(curve: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """
    P + Q by chords and tangents.

    Over p-adic rings "== 0" means indistinguishable from zero, so two points
    with equal x but y-coordinates that are neither equal nor opposite at the
    working precision raise PrecisionExhausted.
    """
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    dx = Q.x - P.x
    if dx == 0:
        if P.y + Q.y == 0:
            return INFINITY
        if Q.y - P.y != 0:
            raise PrecisionExhausted("x-coordinates agree but y-coordinates do not at working precision")
        return _double(curve, P)
    slope = (Q.y - P.y) / dx
    x3 = slope * slope - P.x - Q.x
    return CurvePoint(x3, slope * (P.x - x3) - P.y)


def multiply(curve: Curve, k: int, P: CurvePoint, add: AddLaw = group_law) -> CurvePoint:
    """[k]P by double-and-add"""
    if k < 0:
        return multiply(curve, -k, negate(P), add)
    result = INFINITY
    for bit in bin(k)[2:]:
        result = add(curve, result, result)
        if bit == "1":
            result = add(curve, result, P)
    return result


def torsion_order(curve: Curve, P: CurvePoint, bound: int = MAZUR_BOUND) -> Optional[int]:
    """
    Order of a rational point if it is at most bound, else None.
    Over an integral model a point with a non-integral coordinate has infinite order.
    """
    if P.is_infinity:
        return 1
    if (
        isinstance(P.x, Fraction)
        and isinstance(P.y, Fraction)
        and all(Fraction(c).denominator == 1 for c in (curve.A, curve.B))
        and (P.x.denominator != 1 or P.y.denominator != 1)
    ):
        return None
    Q = P
    for k in range(1, bound + 1):
        if Q.is_infinity:
            return k
        if k < bound:
            Q = group_law(curve, Q, P)
    return None


def is_torsion(curve: Curve, P: CurvePoint) -> bool:
    return torsion_order(curve, P) is not None
