from dataclasses import replace
from fractions import Fraction
from functools import partial

import pytest

import certifier.good as good
from certifier import (
    GOOD,
    NOT_GOOD,
    TRIVIAL,
    GoodPointCertificate,
    certify_good,
    decompose,
    pairing_nonvanishing,
    pairing_status,
    reduction_lambda,
    restrict_level_to_L,
    torsion_lift,
)
from config import MAX_DOUBLINGS
from curves import Curve, CurvePoint, multiply
from errors import InputError, NotOnCurve, PrecisionExhausted, TorsionPoint, WrongResidueClass
from finitefields import p_primary_generator
from localcurves import formal_group_for, local_add, point_from_parameter
from padic import PadicField


def _check_certificate(cert: GoodPointCertificate):
    assert cert.stability
    assert cert.x_valuation % 2 == 0
    assert cert.x_valuation <= -2
    assert cert.x_valuation == -2 * cert.level
    assert 0 <= cert.lambda_ < 7
    assert cert.verdict == (GOOD if cert.x_valuation == -2 else NOT_GOOD)
    if cert.is_good:
        assert restrict_level_to_L(cert) == 6


@pytest.mark.parametrize("n, x, y", [(0, 3, 5), (1, -1, 2)])
def test_certify_family_generators(n, x, y, precision):
    cert = certify_good(n, x, y, precision=precision)
    assert cert.a == -2 + 7 * n
    assert (cert.x, cert.y) == (Fraction(x), Fraction(y))
    _check_certificate(cert)


def test_certificate_json(precision):
    cert = certify_good(0, 3, 5, precision=precision)
    data = cert.to_dict()
    assert data["x"] == "3"
    assert data["lambda"] == cert.lambda_
    assert data["x_valuation_class"] in ("-2", "<=-4")
    assert GoodPointCertificate.from_dict(data) == cert


def test_verdict_does_not_depend_on_generator_choice(precision):
    cert = certify_good(0, 3, 5, precision=precision)
    structure = p_primary_generator(0, 5, 7, 7)
    doubled = multiply(Curve(0, 5), 2, structure.generator)
    other = certify_good(0, 3, 5, precision=precision, generator=doubled)
    assert other.verdict == cert.verdict
    assert (2 * other.lambda_) % 7 == cert.lambda_


def test_certify_rejects_bad_input(precision):
    with pytest.raises(NotOnCurve):
        certify_good(0, 0, 0, precision=precision)
    # y^2 = x^3 - 2 has 6 points over F_5
    with pytest.raises(WrongResidueClass):
        certify_good(0, 3, 5, p=5, precision=precision)


def test_certify_screens_torsion(monkeypatch, precision):
    monkeypatch.setattr(good, "is_torsion", lambda curve, P: True)
    with pytest.raises(TorsionPoint):
        certify_good(0, 3, 5, precision=precision)


def test_precision_escalation_is_bounded(monkeypatch, precision):
    calls = []

    def exhausted(curve, P, lam, structure, working):
        calls.append(working)
        raise PrecisionExhausted("test")

    monkeypatch.setattr(good, "_evaluate", exhausted)
    with pytest.raises(PrecisionExhausted):
        certify_good(0, 3, 5, precision=precision)
    assert calls == [precision * 2 ** k for k in range(MAX_DOUBLINGS + 1)]


def test_restriction_needs_a_good_certificate(precision):
    cert = certify_good(0, 3, 5, precision=precision)
    with pytest.raises(InputError):
        restrict_level_to_L(replace(cert, verdict=NOT_GOOD))


@pytest.fixture
def setting(family_curve, precision):
    base = PadicField(7, precision)
    structure = p_primary_generator(0, 5, 7, 7)
    return base, structure, torsion_lift(base, family_curve, structure)


def test_decompose_torsion_point(setting, family_curve):
    base, structure, P0 = setting
    result = decompose(base, family_curve, P0, structure, P0)
    assert result.c == 1
    assert result.formal_class_level == TRIVIAL
    assert result.formal_part.is_infinity


def test_decompose_formal_point(setting, family_curve):
    base, structure, P0 = setting
    P = point_from_parameter(formal_group_for(base, family_curve), base.embed(7))
    result = decompose(base, family_curve, P, structure, P0)
    assert result.c == 0
    assert result.formal_class_level == 1
    assert result.level == 1


def test_decompose_agrees_with_certificate(family_curve, precision):
    cert = certify_good(0, 3, 5, precision=precision)
    base = PadicField(7, cert.precision_used)
    structure = p_primary_generator(0, 5, 7, 7)
    P = CurvePoint(Fraction(3), Fraction(5))
    result = decompose(base, family_curve, P, structure)
    assert result.c == reduction_lambda(family_curve, P, structure) == cert.lambda_
    assert result.level == cert.level
    assert (result.formal_class_level == 1) == cert.is_good


def test_decompose_class_is_unchanged_by_multiples_of_p(setting, family_curve):
    base, structure, P0 = setting
    add = partial(local_add, base)
    P = CurvePoint(base.embed(3), base.embed(5))
    Q = multiply(family_curve, 2, P, add)
    shifted = add(family_curve, P, multiply(family_curve, 7, Q, add))
    before = decompose(base, family_curve, P, structure, P0)
    after = decompose(base, family_curve, shifted, structure, P0)
    assert after.c == before.c
    assert after.formal_class_level == before.formal_class_level


@pytest.mark.parametrize("levels", [(1, 6), (2, 5), (3, 4)])
def test_complementary_levels_pair_nontrivially(levels):
    assert pairing_nonvanishing(*levels, 7, 1)


@pytest.mark.parametrize("levels", [(1, 1), (6, 6), (1, 5)])
def test_other_levels_pair_trivially(levels):
    assert not pairing_nonvanishing(*levels, 7, 1)


def test_pairing_over_quadratic_residue_field_is_indeterminate():
    status = pairing_status(1, 6, 7, 2)
    assert not status.nonvanishing
    assert status.indeterminate
    assert not pairing_status(1, 1, 7, 2).indeterminate


def test_pairing_levels_out_of_range():
    with pytest.raises(ValueError):
        pairing_nonvanishing(0, 7, 7)
    with pytest.raises(ValueError):
        pairing_nonvanishing(1, 8, 7)
