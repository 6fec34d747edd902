import random
from fractions import Fraction

import pytest
from sympy import multiplicity

from errors import DivisionByZeroAtPrecision, HenselConditionFailed, NotAOneUnit
from finitefields import FiniteField
from localfields import (
    AtLeast,
    ext_arith,
    hensel_root_ext,
    make_cyclotomic,
    make_unramified,
    unit_filtration_level,
    valuation_L,
)
from padic import PadicField


@pytest.fixture
def cyclotomic():
    return make_cyclotomic(7, 6)


def test_cyclotomic_valuations(cyclotomic):
    L = cyclotomic
    assert (L.e, L.f, L.degree) == (6, 1, 6)
    assert L.valuation(L.uniformizer()) == 1
    assert L.valuation(L.embed(7)) == 6
    assert isinstance(valuation_L(L.zero()), AtLeast)


def test_zeta_is_a_seventh_root_of_unity(cyclotomic):
    zeta = cyclotomic.zeta()
    assert zeta ** 7 == 1
    assert not zeta == 1
    assert unit_filtration_level(zeta) == 1


def test_inverse_of_uniformizer(cyclotomic):
    pi = cyclotomic.uniformizer()
    inverse = pi.inverse()
    assert cyclotomic.valuation(inverse) == -1
    assert pi * inverse == 1


def test_not_a_one_unit(cyclotomic):
    with pytest.raises(NotAOneUnit):
        unit_filtration_level(cyclotomic.embed(2))


def test_unramified_residues():
    K = make_unramified(5, 2, 8)
    assert K.residue_field == FiniteField(5, 2)
    g = K.gen()
    assert K.valuation(g) == 0
    assert g.residue() == FiniteField(5, 2)([0, 1])
    assert K.valuation(K.embed(25)) == 2


def test_newton_lift_over_q5():
    base = PadicField(5, 10)
    root = hensel_root_ext([1, 0, 1], base.embed(2))
    assert root * root == -1


def test_newton_lift_over_extension():
    K = make_unramified(5, 2, 8)
    # x is a root of the modulus x^2 + 2, so x^2 = -2 has a root near x
    root = hensel_root_ext([1, 0, 2], K.gen())
    assert root * root == -2


def test_newton_lift_condition():
    base = PadicField(7, 10)
    with pytest.raises(HenselConditionFailed):
        hensel_root_ext([1, 0, -3], base.embed(1))


def _random_element(rng, L):
    return L.element([rng.randint(-20, 20) for _ in range(L.degree)])


def _nonzero_pairs(L, seed, count=30):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        x = _random_element(rng, L) * L.uniformizer() ** rng.randint(0, 3)
        y = _random_element(rng, L)
        if not (x.is_zero() or y.is_zero()):
            pairs.append((x, y))
    return pairs


@pytest.mark.parametrize("make", [
    lambda: make_cyclotomic(7, 10),
    lambda: make_unramified(5, 2, 10),
])
def test_valuation_is_additive_and_ultrametric(make):
    L = make()
    for x, y in _nonzero_pairs(L, seed=L.degree):
        vx, vy = L.valuation(x), L.valuation(y)
        assert L.valuation(x * y) == vx + vy
        if vx != vy:
            assert L.valuation(x + y) == min(vx, vy)


@pytest.mark.parametrize("make", [
    lambda: make_cyclotomic(7, 10),
    lambda: make_unramified(7, 2, 10),
    lambda: make_unramified(7, 1, 10),
])
def test_valuation_restricts_to_e_times_v_p(make):
    L = make()
    rng = random.Random(17)
    for _ in range(50):
        r = Fraction(rng.choice([n for n in range(-500, 501) if n]), rng.randint(1, 500))
        v = multiplicity(7, abs(r.numerator)) - multiplicity(7, r.denominator)
        assert L.valuation(L.embed(r)) == L.e * v


@pytest.mark.parametrize("make", [
    lambda: make_cyclotomic(7, 8),
    lambda: make_unramified(5, 2, 8),
    lambda: make_unramified(7, 3, 8),
])
def test_residue_map_is_a_ring_homomorphism(make):
    L = make()
    rng = random.Random(23)
    assert L.residue(L.one()) == 1
    for _ in range(30):
        x, y = _random_element(rng, L), _random_element(rng, L)
        assert L.residue(x + y) == L.residue(x) + L.residue(y)
        assert L.residue(x * y) == L.residue(x) * L.residue(y)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_zeta_powers(p):
    L = make_cyclotomic(p, 8)
    zeta = L.zeta()
    assert zeta ** p == 1
    assert sum((zeta ** i for i in range(p)), L.zero()) == 0


def test_cyclotomic_modulus_for_five():
    L = make_cyclotomic(5, 8)
    # x^4 + 5x^3 + 10x^2 + 10x + 5
    assert L.modulus == (5, 10, 10, 5, 1)
    assert L.degree == 4
    pi = L.uniformizer()
    assert pi ** 4 + 5 * pi ** 3 + 10 * pi ** 2 + 10 * pi + 5 == 0
    assert L.valuation(L.embed(5)) == 4


def test_ext_arith(cyclotomic):
    L = cyclotomic
    pi, zeta = L.uniformizer(), L.zeta()
    assert L.valuation(ext_arith(pi ** 6, L.embed(7), "div")) == 0
    assert ext_arith(zeta, zeta ** 6, "mul") == 1
    product = ext_arith(1 + pi, 1 - pi, "mul")
    assert product == 1 - pi ** 2
    assert L.valuation(ext_arith(product, L.one(), "sub")) == 2
    assert ext_arith(pi, pi, "add") == 2 * pi
    assert ext_arith(pi, pi, "sub").is_zero()


def test_ext_arith_errors(cyclotomic):
    with pytest.raises(DivisionByZeroAtPrecision):
        ext_arith(cyclotomic.one(), cyclotomic.zero(), "div")
    with pytest.raises(ValueError):
        ext_arith(cyclotomic.one(), cyclotomic.one(), "pow")
