"""
Q_p as a local base
Same surface as localfields.LocalField so curve code can run over either
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from errors import PrecisionExhausted
from finitefields.fq import FiniteField, FqElement
from padic.numbers import PadicNumber, embed


@dataclass(frozen=True)
class PadicField:
    """Q_p with elements known to absolute precision p^precision"""
    prime: int
    precision: int

    e = 1
    f = 1

    @property
    def residue_field(self) -> FiniteField:
        return FiniteField(self.prime, 1)

    def embed(self, value: Union[int, Fraction, PadicNumber]) -> PadicNumber:
        if isinstance(value, PadicNumber):
            return value
        return embed(value, self.prime, self.precision)

    def zero(self) -> PadicNumber:
        return PadicNumber.zero(self.prime, self.precision)

    def one(self) -> PadicNumber:
        return self.embed(1)

    def uniformizer(self) -> PadicNumber:
        return self.embed(self.prime)

    def is_zero(self, z: PadicNumber) -> bool:
        return z.is_zero()

    def valuation(self, z: PadicNumber) -> int:
        if z.is_zero():
            raise PrecisionExhausted(f"valuation of {z} is not determined")
        return z.valuation

    def residue(self, z: PadicNumber) -> FqElement:
        return self.residue_field(z.residue())

    def lift_residue(self, value: FqElement) -> PadicNumber:
        return self.embed(value.coeffs[0])
