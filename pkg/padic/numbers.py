"""
Truncated p-adic numbers
An element of Q_p is stored as p^valuation * unit, known modulo p^precision
"""
from fractions import Fraction
from typing import List, Union

from sympy import multiplicity

from errors import DivisionByZeroAtPrecision

Rational = Union[int, Fraction]


def _int_valuation(value: int, p: int) -> int:
    return int(multiplicity(p, abs(value)))


class PadicNumber:
    """
    Element of Q_p at finite absolute precision.

    A nonzero element has p not dividing `unit` and valuation < precision.
    Anything that vanishes modulo p^precision is "zero at O(p^precision)":
    unit 0 and valuation equal to the precision, which is only a lower bound.
    """

    __slots__ = ("prime", "valuation", "unit", "precision")

    def __init__(self, prime: int, valuation: int, unit: int, precision: int):
        self.prime = prime
        self.valuation = valuation
        self.unit = unit
        self.precision = precision

    @classmethod
    def zero(cls, prime: int, precision: int) -> "PadicNumber":
        return cls(prime, precision, 0, precision)

    @classmethod
    def from_parts(
        cls, prime: int, valuation: int, value: int, precision: int
    ) -> "PadicNumber":
        """Build p^valuation * value modulo p^precision, stripping p from value"""
        if value == 0 or valuation >= precision:
            return cls.zero(prime, precision)
        k = _int_valuation(value, prime)
        valuation += k
        if valuation >= precision:
            return cls.zero(prime, precision)
        value //= prime ** k
        return cls(prime, valuation, value % prime ** (precision - valuation), precision)

    # Queries

    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def relative_precision(self) -> int:
        return 0 if self.is_zero() else self.precision - self.valuation

    def residue(self) -> int:
        """Image in F_p; defined for elements of Z_p"""
        if self.is_zero() or self.valuation > 0:
            return 0
        if self.valuation < 0:
            raise ValueError(f"{self} has negative valuation and no residue")
        return self.unit % self.prime

    def to_fraction(self) -> Fraction:
        """The canonical rational representative p^valuation * unit"""
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.prime) ** self.valuation * self.unit

    def digits(self) -> List[int]:
        """Base-p digits from p^min(0, valuation) up to p^(precision - 1)"""
        start = min(0, self.valuation)
        if self.is_zero():
            return [0] * (self.precision - start)
        value = self.unit * self.prime ** (self.valuation - start)
        out = []
        for _ in range(self.precision - start):
            value, digit = divmod(value, self.prime)
            out.append(digit)
        return out

    # Precision handling

    def with_precision(self, precision: int) -> "PadicNumber":
        """Forget digits at or beyond p^precision"""
        precision = min(precision, self.precision)
        if self.is_zero():
            return PadicNumber.zero(self.prime, precision)
        return PadicNumber.from_parts(self.prime, self.valuation, self.unit, precision)

    def lift_to(self, precision: int) -> "PadicNumber":
        """Treat the stored representative as exact and re-embed it at a new precision"""
        if self.is_zero():
            return PadicNumber.zero(self.prime, precision)
        return PadicNumber.from_parts(self.prime, self.valuation, self.unit, precision)

    def shift(self, k: int) -> "PadicNumber":
        """Multiply by p^k exactly"""
        return PadicNumber(self.prime, self.valuation + k, self.unit, self.precision + k)

    # Arithmetic

    def _coerce(self, other) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise ValueError(f"cannot mix Q_{self.prime} and Q_{other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            value = Fraction(other)
            if value == 0:
                return PadicNumber.zero(
                    self.prime, self.precision + max(self.relative_precision, 1)
                )
            v = _int_valuation(value.numerator, self.prime) - _int_valuation(
                value.denominator, self.prime
            )
            precision = max(self.precision, v + self.relative_precision) + 1
            return embed_rational(value.numerator, value.denominator, self.prime, precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        precision = min(self.precision, other.precision)
        if self.is_zero():
            return other.with_precision(precision)
        if other.is_zero():
            return self.with_precision(precision)
        v = min(self.valuation, other.valuation)
        value = self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)
        return PadicNumber.from_parts(p, v, value, precision)

    __radd__ = __add__

    def __neg__(self) -> "PadicNumber":
        if self.is_zero():
            return self
        modulus = self.prime ** self.relative_precision
        return PadicNumber(self.prime, self.valuation, (-self.unit) % modulus, self.precision)

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
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        if self.is_zero() or other.is_zero():
            return PadicNumber.zero(p, self.valuation + other.valuation)
        r = min(self.relative_precision, other.relative_precision)
        v = self.valuation + other.valuation
        return PadicNumber(p, v, (self.unit * other.unit) % p ** r, v + r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroAtPrecision(f"division by {other}")
        p = self.prime
        if self.is_zero():
            return PadicNumber.zero(p, self.precision - other.valuation)
        r = min(self.relative_precision, other.relative_precision)
        modulus = p ** r
        v = self.valuation - other.valuation
        return PadicNumber(p, v, (self.unit * pow(other.unit, -1, modulus)) % modulus, v + r)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "PadicNumber":
        if exponent < 0:
            return (1 / self) ** (-exponent)
        result = PadicNumber.from_parts(self.prime, 0, 1, max(self.relative_precision, 1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        """Indistinguishable at the common precision"""
        if isinstance(other, PadicNumber) and other.prime != self.prime:
            return False
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self) -> str:
        p = self.prime
        terms = []
        for exponent, digit in enumerate(self.digits(), start=min(0, self.valuation)):
            if digit == 0:
                continue
            if exponent == 0:
                terms.append(f"{digit}")
            elif exponent == 1:
                terms.append(f"{digit}*{p}")
            else:
                terms.append(f"{digit}*{p}^{exponent}")
        terms.append(f"O({p}^{self.precision})")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"PadicNumber({self})"


def embed_rational(num: int, den: int, p: int, precision: int) -> PadicNumber:
    """Image of num/den in Q_p to absolute precision"""
    if den == 0:
        raise ZeroDivisionError("denominator is zero")
    if num == 0:
        return PadicNumber.zero(p, precision)
    v_num = _int_valuation(num, p)
    v_den = _int_valuation(den, p)
    v = v_num - v_den
    if v >= precision:
        return PadicNumber.zero(p, precision)
    modulus = p ** (precision - v)
    unit_num = num // p ** v_num
    unit_den = den // p ** v_den
    return PadicNumber(p, v, (unit_num * pow(unit_den, -1, modulus)) % modulus, precision)


def embed(value: Rational, p: int, precision: int) -> PadicNumber:
    """embed_rational for ints and Fractions"""
    value = Fraction(value)
    return embed_rational(value.numerator, value.denominator, p, precision)


def arith(x: PadicNumber, y: PadicNumber, op: str) -> PadicNumber:
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
