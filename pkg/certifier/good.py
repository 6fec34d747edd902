"""
Certification of good points on E_n : y^2 = x^3 - 2 + 7n at p = 7

With #E(F_p) = p every point reduces into <P0bar>, so a single lambda sends
P - lambda P0 into the formal group; the point is good when that difference
has x-valuation exactly -2.
"""
import logging
from dataclasses import replace
from fractions import Fraction
from functools import partial
from typing import Optional, Tuple

from config import (
    DEFAULT_PRECISION,
    DEFAULT_PRIME,
    FAMILY_BASE,
    FAMILY_STEP,
    GENERATOR_SEED,
    MAX_DOUBLINGS,
)
from curves.weierstrass import Curve, CurvePoint, is_torsion, multiply, negate, on_curve
from errors import (
    BadPrime,
    ConsistencyFailure,
    InputError,
    NotInFormalGroup,
    NotOnCurve,
    PrecisionExhausted,
    TorsionPoint,
    WrongResidueClass,
)
from certifier.certificate import GOOD, NOT_GOOD, GoodPointCertificate
from finitefields.counting import PPrimaryStructure, count_points, dlog_p_primary, p_primary_generator
from finitefields.fq import FiniteField
from localcurves.formal import formal_parameter, local_add
from localcurves.torsion import etale_torsion_lift, reduce_point, reduce_rational, torsion7_qp
from localfields.field import make_cyclotomic
from padic.field import PadicField

logger = logging.getLogger(__name__)


def family_coefficient(n: int) -> int:
    return FAMILY_BASE + FAMILY_STEP * n


def torsion_lift(base: PadicField, curve: Curve, structure: PPrimaryStructure) -> CurvePoint:
    """P0 over Q_p: the explicit 7-torsion when p = 7, the etale lift otherwise"""
    if base.prime == 7 and curve.A == 0 and curve.B % 7 == 5:
        for point in torsion7_qp(curve.B, base.precision):
            if reduce_point(base, point) == structure.generator:
                return point
        raise ConsistencyFailure("no 7-torsion point reduces to the chosen generator")
    return etale_torsion_lift(base, curve, structure)


def formal_component(
    curve: Curve, P: CurvePoint, lam: int, structure: PPrimaryStructure, precision: int
) -> Tuple[PadicField, CurvePoint]:
    """P - lambda P0 over Q_p at the given precision"""
    base = PadicField(structure.prime, precision)
    add = partial(local_add, base)
    P0 = torsion_lift(base, curve, structure)
    local = CurvePoint(base.embed(P.x), base.embed(P.y))
    return base, add(curve, local, negate(multiply(curve, lam, P0, add)))


def _evaluate(
    curve: Curve, P: CurvePoint, lam: int, structure: PPrimaryStructure, precision: int
) -> Tuple[int, int]:
    base, D = formal_component(curve, P, lam, structure, precision)
    if D.is_infinity:
        raise PrecisionExhausted("P - lambda P0 vanishes at working precision")
    try:
        formal = formal_parameter(base, D)
    except NotInFormalGroup as exc:
        raise ConsistencyFailure(f"P - lambda P0 does not reduce to O: {exc}") from exc
    x_valuation = base.valuation(D.x)
    if x_valuation % 2:
        raise ConsistencyFailure(f"odd x-valuation {x_valuation}")
    return x_valuation, formal.level


def reduction_lambda(curve: Curve, P: CurvePoint, structure: PPrimaryStructure) -> int:
    """The lambda in [0, p) with r(P) = lambda * P0bar"""
    return dlog_p_primary(curve, reduce_rational(P, structure.field), structure.generator, structure.p_order)


def family_structure(
    a: int, p: int, seed: int = GENERATOR_SEED, generator: Optional[CurvePoint] = None
) -> PPrimaryStructure:
    if a % p == 0:
        raise BadPrime(f"{p} divides a = {a}")
    count = count_points(0, a % p, p)
    if count != p:
        raise WrongResidueClass(f"#E(F_{p}) = {count}, not {p}")
    structure = p_primary_generator(0, a % p, p, p, seed)
    if generator is not None:
        if generator.is_infinity:
            raise InputError("the generator must be an affine point")
        structure = replace(structure, generator=generator)
    return structure


def certify_good(
    n: int,
    x,
    y,
    p: int = DEFAULT_PRIME,
    precision: int = DEFAULT_PRECISION,
    seed: int = GENERATOR_SEED,
    generator: Optional[CurvePoint] = None,
) -> GoodPointCertificate:
    """
    Certify a rational point on E_n, escalating precision on demand and
    recomputing at twice the precision that succeeded.
    """
    a = family_coefficient(n)
    curve = Curve(0, a)
    P = CurvePoint(Fraction(x), Fraction(y))
    if not on_curve(curve, P):
        raise NotOnCurve(f"({x}, {y}) is not on y^2 = x^3 + {a}")
    structure = family_structure(a, p, seed, generator)
    if is_torsion(curve, P):
        raise TorsionPoint(f"({x}, {y}) is a torsion point of y^2 = x^3 + {a}")
    lam = reduction_lambda(curve, P, structure)

    for doubling in range(MAX_DOUBLINGS + 1):
        working = precision * 2 ** doubling
        try:
            x_valuation, level = _evaluate(curve, P, lam, structure, working)
            check_valuation, _ = _evaluate(curve, P, lam, structure, 2 * working)
            break
        except PrecisionExhausted as exc:
            logger.debug("n = %d: precision %d exhausted (%s)", n, working, exc)
    else:
        raise PrecisionExhausted(f"n = {n}: no verdict after {MAX_DOUBLINGS} doublings of {precision}")

    verdict = GOOD if x_valuation == -2 else NOT_GOOD
    check_verdict = GOOD if check_valuation == -2 else NOT_GOOD
    G = structure.generator
    return GoodPointCertificate(
        n=n,
        a=a,
        prime=p,
        x=P.x,
        y=P.y,
        lambda_=lam,
        x_valuation=x_valuation,
        level=level,
        verdict=verdict,
        precision_used=working,
        stability=check_verdict == verdict and check_valuation == x_valuation,
        generator=(G.x.to_int(), G.y.to_int()),
        seed=seed,
    )


def restrict_level_to_L(cert: GoodPointCertificate) -> int:
    """Level of the formal component of a Good point after base change to Q_p(zeta_p)"""
    if not cert.is_good:
        raise InputError("restriction needs a Good certificate")
    p = cert.prime
    field = FiniteField(p)
    generator = CurvePoint(field(cert.generator[0]), field(cert.generator[1]))
    structure = family_structure(cert.a, p, cert.seed, generator)
    curve = Curve(0, cert.a)
    _, D = formal_component(curve, CurvePoint(cert.x, cert.y), cert.lambda_, structure, cert.precision_used)
    L = make_cyclotomic(p, cert.precision_used)
    level = formal_parameter(L, CurvePoint(L.embed(D.x), L.embed(D.y))).level
    if level != (p - 1) * cert.level:
        raise ConsistencyFailure(f"restricted level {level}, expected {(p - 1) * cert.level}")
    return level
