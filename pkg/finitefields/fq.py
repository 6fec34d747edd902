"""
Finite fields F_q = F_p[x]/(m(x))
m is the smallest monic irreducible of degree f, ordered lexicographically on (c_{f-1}, ..., c_0)
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Tuple

from sympy import Poly, factorint, symbols

from errors import BadPrime

_X = symbols("x")


@lru_cache(maxsize=None)
def irreducible_modulus(p: int, f: int) -> Tuple[int, ...]:
    """Coefficients of the fixed modulus of F_{p^f}, lowest degree first, leading 1 included"""
    for tail in product(range(p), repeat=f):
        coefficients = (1,) + tail
        if Poly(coefficients, _X, modulus=p).is_irreducible:
            return tuple(reversed(coefficients))
    raise ValueError(f"no irreducible polynomial of degree {f} over F_{p}")


def split_prime_power(q: int) -> Tuple[int, int]:
    """(p, f) with q = p^f for an odd prime p"""
    factors = factorint(q)
    if len(factors) != 1:
        raise BadPrime(f"{q} is not a prime power")
    (p, f), = factors.items()
    if p == 2:
        raise BadPrime("characteristic 2 is not supported")
    return int(p), int(f)


@dataclass(frozen=True)
class FiniteField:
    prime: int
    degree: int = 1

    @classmethod
    def of_order(cls, q: int) -> "FiniteField":
        return cls(*split_prime_power(q))

    @property
    def order(self) -> int:
        return self.prime ** self.degree

    @property
    def modulus(self) -> Tuple[int, ...]:
        return irreducible_modulus(self.prime, self.degree)

    def __call__(self, value) -> "FqElement":
        """Coerce an int, a Fraction, a coefficient sequence or an element"""
        p = self.prime
        if isinstance(value, FqElement):
            if value.field != self:
                raise ValueError(f"{value} does not lie in {self}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{p}")
            value = value.numerator * pow(value.denominator, -1, p)
        if isinstance(value, int):
            return FqElement(self, (value % p,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) % p for c in value)
        if len(coeffs) > self.degree:
            raise ValueError(f"too many coefficients for F_{self.order}")
        return FqElement(self, coeffs + (0,) * (self.degree - len(coeffs)))

    def zero(self) -> "FqElement":
        return self(0)

    def one(self) -> "FqElement":
        return self(1)

    def elements(self) -> Iterator["FqElement"]:
        """Every element, in a fixed order"""
        for coeffs in product(range(self.prime), repeat=self.degree):
            yield FqElement(self, tuple(reversed(coeffs)))

    def __str__(self) -> str:
        return f"F_{self.order}"


class FqElement:
    """Polynomial of degree < f over F_p, lowest coefficient first"""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise ValueError(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.prime
        return FqElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FqElement":
        p = self.field.prime
        return FqElement(self.field, tuple((-a) % p for a in self.coeffs))

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
        p, f = self.field.prime, self.field.degree
        product_ = [0] * (2 * f - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product_[i + j] += a * b
        modulus = self.field.modulus
        for k in range(2 * f - 2, f - 1, -1):
            c = product_[k] % p
            if c:
                for i in range(f):
                    product_[k - f + i] -= c * modulus[i]
        return FqElement(self.field, tuple(c % p for c in product_[:f]))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FqElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            base = base * base
        return result

    def inverse(self) -> "FqElement":
        if self.is_zero():
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def frobenius(self) -> "FqElement":
        return self ** self.field.prime

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        return self ** ((self.field.order - 1) // 2) == 1

    def to_int(self) -> int:
        """The integer representative of an element of the prime field"""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not in the prime field")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.prime, self.field.degree, self.coeffs))

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*x" if i == 1 else f"{c}*x^{i}"))
        return " + ".join(terms) or "0"

    def __repr__(self) -> str:
        return f"FqElement({self} in {self.field})"
