"""
Splitting a point over a local base into torsion and formal parts
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Optional, Union

from curves.weierstrass import INFINITY, Curve, CurvePoint, multiply, negate
from errors import NotInFormalGroup, SplitAssumptionViolated
from finitefields.counting import PPrimaryStructure, dlog_p_primary
from localcurves.formal import formal_parameter, local_add
from localcurves.torsion import etale_torsion_lift, lift_point, reduce_point

logger = logging.getLogger(__name__)

TRIVIAL = "trivial"


@dataclass(frozen=True)
class Decomposition:
    """
    P = c P0 + p S + Phat with Phat in the formal group.
    formal_class_level is the class of Phat in Ehat / [p]Ehat: 1 for a
    nontrivial class over an unramified base, otherwise "trivial".
    level is the raw filtration level of Phat, None when Phat = O.
    """
    c: int
    formal_class_level: Union[int, str]
    level: Optional[int]
    formal_part: CurvePoint


def _local(base, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    x, y = (base.embed(z) if isinstance(z, (int, Fraction)) else z for z in (P.x, P.y))
    return CurvePoint(x, y)


def decompose(
    base, curve: Curve, P: CurvePoint, structure: PPrimaryStructure, P0: Optional[CurvePoint] = None
) -> Decomposition:
    p = base.prime
    m = structure.cofactor
    order = structure.p_order
    add = partial(local_add, base)
    P = _local(base, P)
    if P0 is None:
        P0 = etale_torsion_lift(base, curve, structure)

    reduced = reduce_point(base, P)
    if structure.n0 == 0:
        c = 0
    else:
        idempotent = m * pow(m, -1, order)
        c = dlog_p_primary(curve, multiply(curve, idempotent, reduced), structure.generator, order)
    R = add(curve, P, negate(multiply(curve, c, P0, add)))

    R_bar = reduce_point(base, R)
    S_bar = multiply(curve, pow(p, -1, m) if m > 1 else 0, R_bar)
    if multiply(curve, p, S_bar) != R_bar:
        raise SplitAssumptionViolated("the reduction of P - cP0 is not divisible by p")
    S = lift_point(base, curve, S_bar)
    formal = add(curve, R, negate(multiply(curve, p, S, add)))

    if formal.is_infinity:
        return Decomposition(c, TRIVIAL, None, INFINITY)
    try:
        level = formal_parameter(base, formal).level
    except NotInFormalGroup as exc:
        raise SplitAssumptionViolated(f"P - cP0 - pS does not reduce to O: {exc}") from exc
    logger.debug("decomposed with c = %d, formal level %d", c, level)
    nontrivial = level == 1 and base.e == 1
    return Decomposition(c, 1 if nontrivial else TRIVIAL, level, formal)

