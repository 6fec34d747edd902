"""Finite fields and exhaustive point counting"""
from .fq import FiniteField, FqElement, irreducible_modulus, split_prime_power
from .counting import (
    PPrimaryStructure,
    count_points,
    dlog_p_primary,
    enumerate_points,
    legendre,
    p_primary_generator,
    trace_of_frobenius,
)
