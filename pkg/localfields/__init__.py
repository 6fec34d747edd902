"""Unramified and cyclotomic extensions of Q_p"""
from .element import (
    AtLeast,
    LocalFieldElement,
    ext_arith,
    hensel_root_ext,
    unit_filtration_level,
    valuation_L,
)
from .field import CYCLOTOMIC, UNRAMIFIED, LocalField, make_cyclotomic, make_unramified
