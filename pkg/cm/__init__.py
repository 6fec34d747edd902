"""Class-number-one CM arithmetic and point-count formulas"""
from .quadint import QuadInt, units
from .formulas import (
    admissible_split_primes,
    class_one_model,
    cm_curve,
    conjugate_system_unsolvable,
    count_formula_class_one,
    count_formula_eisenstein,
    eisenstein_primes,
    least_sqrt,
    padic_image,
    primary_normalize,
    represent_norm_form,
    resolve_class_one_convention,
    signed_u,
    sixth_power_residue,
    split_frobenius,
    sqrt_embedding,
)
from .families import (
    anomalous_residue_classes,
    check_family,
    check_gaussian_family,
    class_one_anomalous_classes,
    quadratic_divisibility,
    trace_is_even,
)
