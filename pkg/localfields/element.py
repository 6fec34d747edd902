"""
Elements of a local field Q_p[x]/(m(x)) and the operations built on them:
normalized valuation, residues, inversion, unit filtration and Newton lifting
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from errors import (
    DivisionByZeroAtPrecision,
    HenselConditionFailed,
    NotAOneUnit,
    PrecisionExhausted,
)
from finitefields.fq import FiniteField, FqElement
from padic.numbers import PadicNumber
from utils.helpers import horner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtLeast:
    """A valuation known only as a lower bound"""
    bound: int

    def __str__(self) -> str:
        return f">= {self.bound}"


Valuation = Union[int, AtLeast]


class LocalFieldElement:
    """Polynomial in the field generator with PadicNumber coefficients, lowest degree first"""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Tuple[PadicNumber, ...]):
        self.field = field
        self.coeffs = coeffs

    # Coercion

    def _coerce(self, other):
        if isinstance(other, LocalFieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, PadicNumber)):
            return self.field.embed(other)
        return NotImplemented

    def _scalar(self, other):
        """other as a PadicNumber scalar, or None when it is a field element"""
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field._embed_scalar(other)
        return None

    # Ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalFieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "LocalFieldElement":
        return LocalFieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        scalar = self._scalar(other)
        if scalar is not None:
            return LocalFieldElement(self.field, tuple(a * scalar for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        product = [None] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                term = a * b
                product[i + j] = term if product[i + j] is None else product[i + j] + term
        modulus = self.field.modulus
        # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            c = product[k]
            for i in range(d):
                if modulus[i]:
                    product[k - d + i] = product[k - d + i] - c * modulus[i]
        return LocalFieldElement(self.field, tuple(product[:d]))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LocalFieldElement":
        """Multiply by p^k exactly"""
        return LocalFieldElement(self.field, tuple(c.shift(k) for c in self.coeffs))

    def inverse(self) -> "LocalFieldElement":
        """
        Write self = p^j * u1 with 0 <= v(u1) = r < e, move u1 to a unit u
        with a power of the uniformizer, then invert u by Newton's iteration.
        """
        k = self.valuation_L()
        if isinstance(k, AtLeast):
            raise DivisionByZeroAtPrecision(f"division by {self}, valuation {k}")
        e = self.field.e
        j, r = divmod(k, e)
        u = self.shift(-j)
        correction = None
        if r:
            correction = self.field.uniformizer() ** (e - r)
            u = (u * correction).shift(-1)
        residue = u.residue()
        z = self.field.lift_residue(residue.inverse())
        precision = max(c.precision for c in u.coeffs)
        for _ in range((e * (precision + 2)).bit_length() + 1):
            z = z * (2 - u * z)
        if r:
            return (z * correction).shift(-(j + 1))
        return z.shift(-j)

    def __truediv__(self, other):
        scalar = self._scalar(other)
        if scalar is not None:
            return LocalFieldElement(self.field, tuple(a / scalar for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "LocalFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Valuation and residue

    def valuation_L(self) -> Valuation:
        """Normalized valuation with v_L(p) = e, or a lower bound when indistinguishable from 0"""
        ramified = self.field.e > 1
        e = self.field.e
        best = None
        bound = None
        for i, c in enumerate(self.coeffs):
            weight = i if ramified else 0
            unknown = e * c.precision + weight
            bound = unknown if bound is None else min(bound, unknown)
            if not c.is_zero():
                v = e * c.valuation + weight
                best = v if best is None else min(best, v)
        if best is not None and best < bound:
            return best
        return AtLeast(bound)

    def is_zero(self) -> bool:
        return isinstance(self.valuation_L(), AtLeast)

    def residue(self) -> FqElement:
        v = self.valuation_L()
        if not isinstance(v, AtLeast) and v < 0:
            raise ValueError(f"{self} has negative valuation and no residue")
        field = FiniteField(self.field.prime, self.field.f)
        if self.field.e > 1:
            return field(self.coeffs[0].residue())
        return field([c.residue() for c in self.coeffs])

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, LocalFieldElement) else other
        if other is NotImplemented:
            return NotImplemented
        if other.field != self.field:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = f"({c})"
            terms.append(term if i == 0 else (f"{term}*x" if i == 1 else f"{term}*x^{i}"))
        return " + ".join(terms) or f"O({self.field.prime}^{min(c.precision for c in self.coeffs)})"

    def __repr__(self) -> str:
        return f"LocalFieldElement({self})"


def ext_arith(x: LocalFieldElement, y: LocalFieldElement, op: str) -> LocalFieldElement:
    """Dispatch one of add, sub, mul, div"""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def valuation_L(x: LocalFieldElement) -> Valuation:
    return x.valuation_L()


def unit_filtration_level(u: LocalFieldElement) -> int:
    """Largest i with u in 1 + m_L^i"""
    v = u.valuation_L()
    if isinstance(v, AtLeast) or v != 0 or u.residue() != 1:
        raise NotAOneUnit(f"{u} is not a 1-unit")
    level = (u - 1).valuation_L()
    if isinstance(level, AtLeast):
        raise PrecisionExhausted(f"{u} is 1 at working precision")
    return level


def _valuation_of(z) -> Valuation:
    if isinstance(z, LocalFieldElement):
        return z.valuation_L()
    if z.is_zero():
        return AtLeast(z.precision)
    return z.valuation


def hensel_root_ext(coefficients: Sequence, seed):
    """
    Newton's method for a root of f near seed, f given leading coefficient first.
    Works over LocalFieldElement and PadicNumber alike.
    """
    degree = len(coefficients) - 1
    derivative = [c * (degree - i) for i, c in enumerate(coefficients[:-1])]
    value = horner(coefficients, seed)
    v_value = _valuation_of(value)
    if isinstance(v_value, AtLeast):
        return seed
    v_slope = _valuation_of(horner(derivative, seed))
    if isinstance(v_slope, AtLeast) or v_value <= 2 * v_slope:
        raise HenselConditionFailed(
            f"v(f(seed)) = {v_value} is not above 2 v(f'(seed)) = 2 * {v_slope}"
        )
    x = seed
    for step in range(256):
        x = x - value / horner(derivative, x)
        value = horner(coefficients, x)
        if isinstance(_valuation_of(value), AtLeast):
            logger.debug("newton lift converged after %d steps", step + 1)
            return x
    raise PrecisionExhausted("newton lift did not converge")
