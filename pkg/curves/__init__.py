"""Weierstrass curves over arbitrary coefficient rings"""
from .weierstrass import (
    Curve,
    CurvePoint,
    INFINITY,
    on_curve,
    negate,
    group_law,
    multiply,
    torsion_order,
    is_torsion,
)
from .division import division_polynomial, torsion_polynomial
