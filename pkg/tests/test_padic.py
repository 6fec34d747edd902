import operator
import random
from fractions import Fraction

import pytest
from sympy import Poly, multiplicity, symbols

from errors import DivisionByZeroAtPrecision, NoSimpleRoot, NotASquare, OddValuation, PrecisionExhausted
from padic import PadicField, PadicNumber, arith, embed, hensel_root, sqrt, teichmuller


def test_sqrt_minus_three_digits():
    root = sqrt(embed(-3, 7, 4), 2)
    assert root.digits() == [2, 5, 0, 6]
    assert str(root) == "2 + 5*7 + 6*7^3 + O(7^4)"


def test_sqrt_squares_back():
    root = sqrt(embed(-3, 7, 20), 2)
    assert root * root == -3
    assert root.residue() == 2


def test_embed_rational_valuation_and_unit():
    x = embed(98, 7, 5)
    assert x.valuation == 2
    assert x.unit == 2
    assert embed(Fraction(1, 49), 7, 10).valuation == -2


def test_inverse_of_three():
    third = embed(Fraction(1, 3), 7, 10)
    assert third * 3 == 1
    assert arith(embed(1, 7, 10), embed(3, 7, 10), "div") == third


def test_digits_below_zero():
    x = embed(Fraction(1, 7), 7, 3)
    assert x.digits()[0] == 1
    assert x.to_fraction() == Fraction(1, 7)


def test_division_by_zero_at_precision():
    with pytest.raises(DivisionByZeroAtPrecision):
        embed(1, 7, 5) / PadicNumber.zero(7, 5)


def test_teichmuller_is_a_cube_root_of_unity():
    zeta = teichmuller(4, 7, 10)
    assert zeta ** 3 == 1
    assert zeta.residue() == 4


def test_hensel_root_accepts_poly():
    x = symbols("x")
    root = hensel_root(Poly(x ** 2 + 3, x), 2, 7, 8)
    assert root * root == -3


def test_hensel_root_rejects_multiple_root():
    with pytest.raises(NoSimpleRoot):
        hensel_root([1, 0, 0], 0, 7, 5)


def test_nth_root_errors():
    with pytest.raises(OddValuation):
        sqrt(embed(7, 7, 10), 1)
    with pytest.raises(NotASquare):
        sqrt(embed(3, 7, 10), 1)


def test_padic_field_valuation_of_zero():
    base = PadicField(7, 10)
    assert base.valuation(base.embed(Fraction(2, 49))) == -2
    with pytest.raises(PrecisionExhausted):
        base.valuation(base.zero())


def test_precision_is_tracked_through_products():
    x = embed(7, 7, 10)
    y = embed(3, 7, 4)
    product = x * y
    assert product.valuation == 1
    assert product.relative_precision == 4


def _random_rational(rng):
    return Fraction(rng.choice([n for n in range(-50, 51) if n]), rng.randint(1, 50))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_arithmetic_agrees_with_exact_rationals(p):
    rng = random.Random(p)
    exact_ops = {
        "add": operator.add,
        "sub": operator.sub,
        "mul": operator.mul,
        "div": operator.truediv,
    }
    for _ in range(40):
        r, s = _random_rational(rng), _random_rational(rng)
        for op, exact in exact_ops.items():
            value = exact(r, s)
            result = arith(embed(r, p, 12), embed(s, p, 12), op)
            assert result == embed(value, p, 12)
            if value:
                v = multiplicity(p, abs(value.numerator)) - multiplicity(p, value.denominator)
                assert result.valuation == v


@pytest.mark.parametrize("p", [5, 7])
def test_doubling_precision_refines_the_result(p):
    rng = random.Random(100 + p)
    for _ in range(40):
        r, s = _random_rational(rng), _random_rational(rng)
        for op in ("add", "sub", "mul", "div"):
            coarse = arith(embed(r, p, 10), embed(s, p, 10), op)
            fine = arith(embed(r, p, 20), embed(s, p, 20), op)
            assert fine.precision >= coarse.precision
            assert fine.with_precision(coarse.precision) == coarse
