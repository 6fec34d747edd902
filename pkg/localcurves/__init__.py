"""Curves over local fields: formal groups, reduction and torsion"""
from .formal import (
    FormalGroup,
    FormalPoint,
    formal_add,
    formal_exp,
    formal_group,
    formal_group_for,
    formal_log,
    formal_parameter,
    local_add,
    point_from_parameter,
)
from .torsion import (
    etale_torsion_lift,
    formal_torsion_cyclotomic,
    lift_point,
    reduce_point,
    reduce_rational,
    torsion7_qp,
)
