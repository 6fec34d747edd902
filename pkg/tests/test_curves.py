import random
from fractions import Fraction

import pytest
from sympy import Poly, expand

from curves import (
    INFINITY,
    Curve,
    CurvePoint,
    division_polynomial,
    group_law,
    is_torsion,
    multiply,
    negate,
    on_curve,
    torsion_order,
    torsion_polynomial,
)
from curves.division import a, x, y
from finitefields import FiniteField, enumerate_points


def test_doubling_on_family_curve(family_curve):
    P = CurvePoint(Fraction(3), Fraction(5))
    assert multiply(family_curve, 2, P) == CurvePoint(Fraction(129, 100), Fraction(-383, 1000))
    assert on_curve(family_curve, multiply(family_curve, 3, P))


def test_group_law_identities(family_curve):
    P = CurvePoint(Fraction(3), Fraction(5))
    assert group_law(family_curve, P, INFINITY) == P
    assert group_law(family_curve, P, negate(P)).is_infinity
    assert multiply(family_curve, 0, P).is_infinity
    assert multiply(family_curve, -1, P) == negate(P)


def test_torsion_orders():
    curve = Curve(0, 1)
    assert torsion_order(curve, CurvePoint(Fraction(2), Fraction(3))) == 6
    assert torsion_order(curve, CurvePoint(Fraction(-1), Fraction(0))) == 2
    assert torsion_order(curve, CurvePoint(Fraction(0), Fraction(1))) == 3


def test_family_generators_are_not_torsion(family_curve):
    assert not is_torsion(family_curve, CurvePoint(Fraction(3), Fraction(5)))
    assert not is_torsion(Curve(0, 5), CurvePoint(Fraction(-1), Fraction(2)))


def test_small_division_polynomials():
    assert torsion_polynomial(3).as_expr() == expand(3 * x ** 4 + 12 * a * x)
    assert division_polynomial(2) == 2 * y
    assert torsion_polynomial(7).degree() == 24


SEXTIC = 7 * x ** 6 - 4 * a * x ** 3 + 16 * a ** 2
DEGREE_18 = (
    x ** 18 + 564 * a * x ** 15 - 5808 * a ** 2 * x ** 12 - 123136 * a ** 3 * x ** 9
    - 189696 * a ** 4 * x ** 6 - 49152 * a ** 5 * x ** 3 + 4096 * a ** 6
)


def test_psi7_factorization_symbolic():
    assert expand(torsion_polynomial(7).as_expr() - SEXTIC * DEGREE_18) == 0


@pytest.mark.parametrize("value", [-2, 5, 12])
def test_psi7_factorization_specialised(value):
    product = expand((SEXTIC * DEGREE_18).subs(a, value))
    assert expand(torsion_polynomial(7, 0, value).as_expr() - product) == 0
    psi = torsion_polynomial(7, 0, value)
    quotient, remainder = psi.set_domain("QQ").div(Poly(SEXTIC.subs(a, value), x, domain="QQ"))
    assert remainder.is_zero
    assert quotient.degree() == 18


def test_torsion_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        torsion_polynomial(0)


@pytest.mark.parametrize("field", [FiniteField(7), FiniteField(11), FiniteField(13), FiniteField(5, 2)])
def test_group_law_is_associative_over_finite_fields(field):
    rng = random.Random(field.order)
    p = field.prime
    curves = 0
    while curves < 4:
        A, B = rng.randrange(p), rng.randrange(p)
        if (4 * A ** 3 + 27 * B ** 2) % p == 0:
            continue
        curves += 1
        curve = Curve(A, B)
        points = enumerate_points(A, B, field) + [INFINITY]
        for _ in range(20):
            P, Q, R = (rng.choice(points) for _ in range(3))
            assert on_curve(curve, group_law(curve, P, Q))
            assert group_law(curve, group_law(curve, P, Q), R) == group_law(curve, P, group_law(curve, Q, R))
