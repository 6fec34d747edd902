"""Shared helpers"""
from .helpers import (
    safe_divide,
    horner,
    parse_rational,
    format_rational,
)
