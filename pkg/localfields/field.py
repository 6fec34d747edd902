"""
Finite extensions of Q_p
Unramified Q_{p^f} and the totally ramified cyclotomic field Q_p(zeta_p)
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Tuple, Union

from config import DEFAULT_PRECISION
from errors import BadPrime, PrecisionExhausted
from finitefields.fq import FiniteField, FqElement, irreducible_modulus
from localfields.element import AtLeast, LocalFieldElement
from padic.numbers import PadicNumber, embed

CYCLOTOMIC = "cyclotomic"
UNRAMIFIED = "unramified"


@dataclass(frozen=True)
class LocalField:
    """
    Q_p[x]/(m(x)) for a monic integer modulus m.

    cyclotomic: m = ((1+x)^p - 1)/x, Eisenstein, x = zeta_p - 1 a uniformizer
    unramified: m lifts the fixed irreducible modulus of F_{p^f}
    """
    prime: int
    kind: str
    e: int
    f: int
    modulus: Tuple[int, ...]  # lowest degree first
    precision: int

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def residue_field(self) -> FiniteField:
        return FiniteField(self.prime, self.f)

    def element(self, coefficients: Sequence) -> LocalFieldElement:
        coeffs = [self._embed_scalar(c) for c in coefficients]
        if len(coeffs) > self.degree:
            raise ValueError(f"too many coefficients for a degree {self.degree} field")
        coeffs += [self._embed_scalar(0)] * (self.degree - len(coeffs))
        return LocalFieldElement(self, tuple(coeffs))

    def _embed_scalar(self, value: Union[int, Fraction, PadicNumber]) -> PadicNumber:
        if isinstance(value, PadicNumber):
            return value
        return embed(value, self.prime, self.precision)

    def embed(self, value) -> LocalFieldElement:
        if isinstance(value, LocalFieldElement):
            return value
        return self.element([value])

    def zero(self) -> LocalFieldElement:
        return self.element([])

    def one(self) -> LocalFieldElement:
        return self.element([1])

    def gen(self) -> LocalFieldElement:
        """The class of x"""
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    def uniformizer(self) -> LocalFieldElement:
        if self.kind == CYCLOTOMIC:
            return self.gen()
        return self.embed(self.prime)

    def zeta(self) -> LocalFieldElement:
        """zeta_p = 1 + x in the cyclotomic field"""
        if self.kind != CYCLOTOMIC:
            raise ValueError("zeta_p lives in the cyclotomic field")
        return self.one() + self.gen()

    def is_zero(self, z: LocalFieldElement) -> bool:
        return z.is_zero()

    def valuation(self, z: LocalFieldElement) -> int:
        v = z.valuation_L()
        if isinstance(v, AtLeast):
            raise PrecisionExhausted(f"valuation of {z} is {v}")
        return v

    def residue(self, z: LocalFieldElement) -> FqElement:
        return z.residue()

    def lift_residue(self, value: FqElement) -> LocalFieldElement:
        """Teichmuller-free lift: the integer coefficients of the residue"""
        if self.kind == CYCLOTOMIC:
            return self.embed(value.coeffs[0])
        return self.element(list(value.coeffs))

    def __str__(self) -> str:
        if self.kind == CYCLOTOMIC:
            return f"Q_{self.prime}(zeta_{self.prime})"
        return f"Q_{self.prime}^{self.f}"


def make_cyclotomic(p: int, precision: int = DEFAULT_PRECISION) -> LocalField:
    """Q_p(zeta_p) with the Eisenstein modulus ((1+x)^p - 1)/x"""
    if p < 5:
        raise BadPrime(f"the cyclotomic field needs p >= 5, got {p}")
    modulus = tuple(comb(p, k + 1) for k in range(p))
    return LocalField(p, CYCLOTOMIC, p - 1, 1, modulus, precision)


def make_unramified(p: int, f: int, precision: int) -> LocalField:
    """Q_{p^f}; f = 1 gives Q_p itself"""
    if p == 2:
        raise BadPrime("p = 2 is not supported")
    if f < 1:
        raise ValueError(f"residue degree must be positive, got {f}")
    return LocalField(p, UNRAMIFIED, 1, f, irreducible_modulus(p, f), precision)
