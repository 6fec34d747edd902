"""
Integers of the class-number-one imaginary quadratic fields
a + b*w with w = sqrt(D) for D in {-1, -2} and w = (-1 + sqrt(D))/2 otherwise
"""
from dataclasses import dataclass
from typing import Tuple

from config import CLASS_ONE_DISCRIMINANTS


@dataclass(frozen=True)
class QuadInt:
    D: int
    a: int
    b: int

    def __post_init__(self):
        if self.D not in CLASS_ONE_DISCRIMINANTS:
            raise ValueError(f"D = {self.D} is not a class-number-one discriminant")

    @classmethod
    def from_half(cls, D: int, u: int, v: int) -> "QuadInt":
        """(u + v*sqrt(D))/2 for odd D, where u and v have equal parity"""
        if D in (-1, -2):
            if u % 2 or v % 2:
                raise ValueError(f"({u} + {v} sqrt({D}))/2 is not integral")
            return cls(D, u // 2, v // 2)
        if (u - v) % 2:
            raise ValueError(f"({u} + {v} sqrt({D}))/2 is not integral")
        return cls(D, (u + v) // 2, v)

    @property
    def _odd(self) -> bool:
        return self.D not in (-1, -2)

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(self.D, other, 0)
        if isinstance(other, QuadInt) and other.D == self.D:
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self.D, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.D, -self.a, -self.b)

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
        a, b, c, d = self.a, self.b, other.a, other.b
        if self._odd:
            # w^2 = -w + (D - 1)/4
            k = (self.D - 1) // 4
            return QuadInt(self.D, a * c + b * d * k, a * d + b * c - b * d)
        return QuadInt(self.D, a * c + self.D * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QuadInt":
        if exponent < 0:
            raise ValueError("negative powers are not integral")
        result = QuadInt(self.D, 1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            base = base * base
        return result

    def conj(self) -> "QuadInt":
        if self._odd:
            return QuadInt(self.D, self.a - self.b, -self.b)
        return QuadInt(self.D, self.a, -self.b)

    def norm(self) -> int:
        if self._odd:
            return self.a * self.a - self.a * self.b + self.b * self.b * (1 - self.D) // 4
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> int:
        if self._odd:
            return 2 * self.a - self.b
        return 2 * self.a

    def is_rational(self) -> bool:
        return self.b == 0

    def mod(self, m: int) -> Tuple[int, int]:
        """Coordinates reduced modulo a rational integer"""
        return self.a % m, self.b % m

    def residue(self, p: int, root: int) -> int:
        """Image in F_p under the map sending sqrt(D) to root"""
        if self._odd:
            w = (-1 + root) * pow(2, -1, p)
            return (self.a + self.b * w) % p
        return (self.a + self.b * root) % p

    def __str__(self) -> str:
        symbol = "i" if self.D == -1 else ("sqrt(-2)" if self.D == -2 else "w")
        return f"{self.a} + {self.b}*{symbol}"


def units(D: int) -> Tuple[QuadInt, ...]:
    """The unit group of Z[w_D]"""
    if D == -1:
        return tuple(QuadInt(D, a, b) for a, b in ((1, 0), (-1, 0), (0, 1), (0, -1)))
    if D == -3:
        w = QuadInt(D, 0, 1)
        return tuple(s * w ** k for k in range(3) for s in (1, -1))
    return (QuadInt(D, 1, 0), QuadInt(D, -1, 0))
