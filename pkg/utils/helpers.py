"""
Utility functions and helpers
"""
from fractions import Fraction
from typing import Sequence


def safe_divide(numerator: float, denominator: float, default: float = 0) -> float:
    """Safely divide two numbers"""
    if denominator == 0:
        return default
    return numerator / denominator


def horner(coefficients: Sequence, value):
    """Evaluate a polynomial given leading coefficient first"""
    acc = coefficients[0]
    for c in coefficients[1:]:
        acc = acc * value + c
    return acc


def parse_rational(text) -> Fraction:
    """Parse "num/den", "num" or an int into a Fraction"""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render a rational as "num/den", or "num" when integral"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
