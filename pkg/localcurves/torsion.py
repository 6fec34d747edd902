"""
Reduction, lifting and torsion over local fields
"""
import logging
from fractions import Fraction
from functools import partial
from typing import List

from config import DEFAULT_PRECISION, LEMMA_BRANCHES
from curves.weierstrass import INFINITY, Curve, CurvePoint, multiply, negate
from errors import BadPrime, ConsistencyFailure, NotInFormalGroup, WrongResidueClass
from finitefields.counting import PPrimaryStructure
from finitefields.fq import FiniteField
from localcurves.formal import (
    FormalPoint,
    formal_exp,
    formal_group_for,
    formal_log,
    formal_parameter,
    local_add,
    point_from_parameter,
)
from localfields.element import hensel_root_ext
from localfields.field import make_cyclotomic
from padic.hensel import cube_root, sqrt, teichmuller
from padic.numbers import embed

logger = logging.getLogger(__name__)


def reduce_rational(P: CurvePoint, field: FiniteField) -> CurvePoint:
    """Reduction of a rational point on an integral model"""
    if P.is_infinity or Fraction(P.x).denominator % field.prime == 0:
        return INFINITY
    return CurvePoint(field(Fraction(P.x)), field(Fraction(P.y)))


def reduce_point(base, P: CurvePoint) -> CurvePoint:
    """Reduction of a point over a local base onto its residue field"""
    if P.is_infinity:
        return INFINITY
    if not base.is_zero(P.x) and base.valuation(P.x) < 0:
        return INFINITY
    return CurvePoint(base.residue(P.x), base.residue(P.y))


def lift_point(base, curve: Curve, Pbar: CurvePoint) -> CurvePoint:
    """Some point over the base reducing to Pbar, by Hensel on y (or on x when y = 0)"""
    if Pbar.is_infinity:
        return INFINITY
    x = base.lift_residue(Pbar.x)
    if not Pbar.y.is_zero():
        y = hensel_root_ext([1, 0, -curve.rhs(x)], base.lift_residue(Pbar.y))
        return CurvePoint(x, y)
    x = hensel_root_ext([1, 0, curve.A, curve.B], x)
    return CurvePoint(x, base.zero())


def torsion7_qp(a: int, precision: int = DEFAULT_PRECISION) -> List[CurvePoint]:
    """
    E[7](Q_7) for y^2 = x^3 + a with a = 5 mod 7: O and the six points
    (cbrt(theta) * zeta3^i, +-sqrt(theta + a)) with theta = 2a(1 + 3 sqrt(-3))/7.
    """
    p = 7
    if a % p != 5:
        raise WrongResidueClass(f"a = {a} is not 5 mod 7")
    work = precision + 2
    s = sqrt(embed(-3, p, work), LEMMA_BRANCHES["sqrt_minus_three_seed"])
    theta = (1 + 3 * s) * (2 * a) / p
    if theta.residue() != LEMMA_BRANCHES["theta_residue"]:
        raise ConsistencyFailure(f"theta = {theta} is not {LEMMA_BRANCHES['theta_residue']} mod 7")
    x = cube_root(theta, LEMMA_BRANCHES["cube_root_seed"])
    zeta3 = teichmuller(LEMMA_BRANCHES["zeta3_residue"], p, work)
    y = sqrt(theta + a, LEMMA_BRANCHES["y_seed"])
    points = [INFINITY]
    for _ in range(3):
        points.append(CurvePoint(x, y))
        points.append(CurvePoint(x, -y))
        x = x * zeta3
    return points


def etale_torsion_lift(base, curve: Curve, structure: PPrimaryStructure) -> CurvePoint:
    """
    The point of order p^n0 over an unramified base reducing to the generator.
    Any lift Q differs from it by a formal point F with [p^n0]F = [p^n0]Q,
    found as exp(log(t([p^n0]Q)) / p^n0).
    """
    if structure.n0 == 0:
        return INFINITY
    if base.e != 1:
        raise BadPrime("torsion lifts are computed over unramified bases")
    add = partial(local_add, base)
    Q = lift_point(base, curve, structure.generator)
    order = structure.p_order
    G = multiply(curve, order, Q, add)
    if G.is_infinity:
        return Q
    try:
        kernel = formal_parameter(base, G)
    except NotInFormalGroup as exc:
        raise ConsistencyFailure(f"[{order}] of a lift does not reduce to O: {exc}") from exc
    group = formal_group_for(base, curve)
    F = point_from_parameter(group, formal_exp(group, formal_log(group, kernel.t) / order))
    logger.debug("etale lift corrected by a formal point of level %d", kernel.level - structure.n0)
    return add(curve, Q, negate(F))


def formal_torsion_cyclotomic(a: int, p: int = 7, precision: int = DEFAULT_PRECISION) -> FormalPoint:
    """
    The 7-torsion point A_v of y^2 = x^3 + a over Q_7(zeta_7) with
    x^3 = theta2 = 2a(1 - 3 sqrt(-3))/7. Since v(theta2) = -1, solve the unit
    equations w^3 = theta2 pi^6 and z^2 = (theta2 + a) pi^6, then
    x = w / pi^2 and y = z / pi^3.
    """
    if p != 7:
        raise BadPrime("the formal torsion point is constructed for p = 7")
    if a % p != 5:
        raise WrongResidueClass(f"a = {a} is not 5 mod 7")
    work = precision + 2
    s = sqrt(embed(-3, p, work), LEMMA_BRANCHES["sqrt_minus_three_seed"])
    theta2 = (1 - 3 * s) * (2 * a) / p
    L = make_cyclotomic(p, work)
    pi = L.uniformizer()
    pi6 = pi ** (p - 1)
    w = hensel_root_ext([1, 0, 0, -(L.embed(theta2) * pi6)], L.one())
    z = hensel_root_ext([1, 0, -(L.embed(theta2 + a) * pi6)], L.one())
    point = CurvePoint(w / pi ** 2, z / pi ** 3)
    formal = formal_parameter(L, point)
    if formal.level != 1:
        raise ConsistencyFailure(f"A_v has level {formal.level}, expected 1")
    return formal
