"""
Hensel lifting over Z_p
Roots of integer polynomials, square and cube roots, Teichmuller representatives
"""
import logging
from typing import Sequence, Union

from sympy import Poly
from sympy.functions.combinatorial.numbers import legendre_symbol

from errors import NoSimpleRoot, NotASquare, OddValuation
from padic.numbers import PadicNumber
from utils.helpers import horner

logger = logging.getLogger(__name__)

Coefficients = Union[Sequence[int], Poly]


def _integer_coefficients(coefficients: Coefficients) -> list:
    if isinstance(coefficients, Poly):
        coefficients = coefficients.all_coeffs()
    return [int(c) for c in coefficients]


def _derivative(coefficients: list) -> list:
    degree = len(coefficients) - 1
    return [c * (degree - i) for i, c in enumerate(coefficients[:-1])]


def hensel_root(coefficients: Coefficients, seed: int, p: int, precision: int) -> PadicNumber:
    """
    Lift a simple root of f modulo p to a root in Z_p modulo p^precision.

    coefficients are listed from the leading term down, as Poly.all_coeffs() does.
    Newton steps double the number of correct digits each time.
    """
    f = _integer_coefficients(coefficients)
    df = _derivative(f)
    if horner(f, seed) % p != 0:
        raise NoSimpleRoot(f"{seed} is not a root of {f} modulo {p}")
    if horner(df, seed) % p == 0:
        raise NoSimpleRoot(f"{seed} is a multiple root of {f} modulo {p}")

    x = seed % p
    known = 1
    while known < precision:
        known = min(2 * known, precision)
        modulus = p ** known
        x = (x - horner(f, x) * pow(horner(df, x), -1, modulus)) % modulus
        logger.debug("hensel step: root known modulo %d^%d", p, known)
    return PadicNumber.from_parts(p, 0, x, precision)


def nth_root(x: PadicNumber, n: int, seed: int) -> PadicNumber:
    """The n-th root of x whose unit part reduces to seed, for p not dividing n"""
    p = x.prime
    if n % p == 0:
        raise ValueError(f"root index {n} is divisible by p = {p}")
    if x.is_zero():
        return PadicNumber.zero(p, -(-x.precision // n))
    if x.valuation % n:
        raise OddValuation(f"valuation {x.valuation} of {x} is not divisible by {n}")
    u = x.unit
    if (pow(seed, n, p) - u) % p != 0:
        if n == 2 and int(legendre_symbol(u % p, p)) == -1:
            raise NotASquare(f"{x} is not a square in Q_{p}")
        raise NotASquare(f"seed {seed} is not a root of X^{n} - {u % p} modulo {p}")
    relative = x.relative_precision
    root = hensel_root([1] + [0] * (n - 1) + [-u], seed, p, relative)
    v = x.valuation // n
    return PadicNumber.from_parts(p, v, root.unit * p ** root.valuation, v + relative)


def sqrt(x: PadicNumber, seed: int) -> PadicNumber:
    return nth_root(x, 2, seed)


def cube_root(x: PadicNumber, seed: int) -> PadicNumber:
    return nth_root(x, 3, seed)


def teichmuller(a: int, p: int, precision: int) -> PadicNumber:
    """The (p-1)-th root of unity congruent to a modulo p"""
    if a % p == 0:
        raise ValueError(f"{a} is divisible by {p}")
    return hensel_root([1] + [0] * (p - 2) + [-1], a % p, p, precision)
