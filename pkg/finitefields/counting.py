"""
Point counting and group structure of E(F_q) by exhaustive enumeration
"""
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional

from sympy import multiplicity
from sympy.functions.combinatorial.numbers import legendre_symbol

from config import GENERATOR_SEED
from curves.weierstrass import INFINITY, Curve, CurvePoint, group_law, multiply
from errors import ComputationError, HasseViolation, NotInSubgroup, NotOrdinary, SingularCurve
from finitefields.fq import FiniteField, split_prime_power

logger = logging.getLogger(__name__)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) as a Python int; 0 when p divides a"""
    return int(legendre_symbol(a % p, p))


def _check_nonsingular(A: int, B: int, field: FiniteField):
    if field(4 * A ** 3 + 27 * B ** 2).is_zero():
        raise SingularCurve(f"y^2 = x^3 + {A}x + {B} is singular over {field}")


def count_points(A: int, B: int, q: int) -> int:
    """#E(F_q) for y^2 = x^3 + Ax + B, point at infinity included"""
    field = FiniteField.of_order(q)
    _check_nonsingular(A, B, field)
    p = field.prime
    if field.degree == 1:
        return 1 + sum(1 + legendre(x ** 3 + A * x + B, p) for x in range(p))
    a, b = field(A), field(B)
    half = (q - 1) // 2
    total = 1
    for x in field.elements():
        rhs = x * x * x + a * x + b
        if rhs.is_zero():
            total += 1
        elif rhs ** half == 1:
            total += 2
    return total


def trace_of_frobenius(A: int, B: int, q: int) -> int:
    """a_q = q + 1 - #E(F_q), checked against the Hasse bound"""
    trace = q + 1 - count_points(A, B, q)
    if trace * trace > 4 * q:
        raise HasseViolation(f"trace {trace} exceeds 2*sqrt({q})")
    return trace


def enumerate_points(A: int, B: int, field: FiniteField) -> List[CurvePoint]:
    """Affine points in a fixed order: x in field order, then y in field order"""
    roots: Dict = {}
    for z in field.elements():
        roots.setdefault(z * z, []).append(z)
    points = []
    for x in field.elements():
        for y in roots.get(x * x * x + A * x + B, []):
            points.append(CurvePoint(x, y))
    return points


@dataclass(frozen=True)
class PPrimaryStructure:
    """E(F_q){p} = <generator>, cyclic of order p^n0, and #E(F_q) = cofactor * p^n0"""
    prime: int
    n0: int
    generator: CurvePoint
    cofactor: int
    order: int
    field: FiniteField
    seed: Optional[int] = None

    @property
    def p_order(self) -> int:
        return self.prime ** self.n0


def p_primary_generator(
    A: int, B: int, q: int, p: int, seed: int = GENERATOR_SEED
) -> PPrimaryStructure:
    """
    Generator of the p-primary part of E(F_q) for an ordinary curve.
    Random points, drawn with a seeded generator, are multiplied by the
    cofactor until one of exact order p^n0 appears.
    """
    field = FiniteField.of_order(q)
    if field.prime != p:
        raise ValueError(f"q = {q} is not a power of p = {p}")
    trace = trace_of_frobenius(A, B, q)
    if trace % p == 0:
        raise NotOrdinary(f"p = {p} divides the trace {trace}")
    order = q + 1 - trace
    n0 = int(multiplicity(p, order))
    cofactor = order // p ** n0
    if n0 == 0:
        return PPrimaryStructure(p, 0, INFINITY, cofactor, order, field, seed)

    curve = Curve(A, B)
    points = enumerate_points(A, B, field)
    rng = random.Random(seed)
    for attempt in range(64 * len(points)):
        G = multiply(curve, cofactor, rng.choice(points))
        if not multiply(curve, p ** (n0 - 1), G).is_infinity:
            logger.debug("p-primary generator found after %d draws", attempt + 1)
            return PPrimaryStructure(p, n0, G, cofactor, order, field, seed)
    raise ComputationError(f"no point of order {p}^{n0} found on y^2 = x^3 + {A}x + {B} over {field}")


def dlog_p_primary(curve: Curve, Q: CurvePoint, G: CurvePoint, order: int) -> int:
    """The c in [0, order) with Q = cG, by brute force"""
    R = INFINITY
    for c in range(order):
        if R == Q:
            return c
        R = group_law(curve, R, G)
    raise NotInSubgroup(f"{Q} is not a multiple of {G}")
