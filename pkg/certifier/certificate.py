"""
Good-point certificates and their JSON form
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from utils.helpers import format_rational, parse_rational

GOOD = "Good"
NOT_GOOD = "NotGood"


@dataclass(frozen=True)
class GoodPointCertificate:
    """
    Result of certifying P on E_n : y^2 = x^3 + a at p.
    verdict is Good exactly when v_p(x(P - lambda P0)) = -2, i.e. the formal
    component has level 1.
    """
    n: int
    a: int
    prime: int
    x: Fraction
    y: Fraction
    lambda_: int
    x_valuation: int
    level: int
    verdict: str
    precision_used: int
    stability: bool
    generator: Tuple[int, int]
    seed: Optional[int] = None

    @property
    def is_good(self) -> bool:
        return self.verdict == GOOD

    @property
    def x_valuation_class(self) -> str:
        return "-2" if self.x_valuation == -2 else "<=-4"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "a": self.a,
            "p": self.prime,
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "lambda": self.lambda_,
            "x_valuation": self.x_valuation,
            "x_valuation_class": self.x_valuation_class,
            "level": self.level,
            "verdict": self.verdict,
            "precision_used": self.precision_used,
            "stable": self.stability,
            "generator": list(self.generator),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GoodPointCertificate":
        return cls(
            n=data["n"],
            a=data["a"],
            prime=data["p"],
            x=parse_rational(data["x"]),
            y=parse_rational(data["y"]),
            lambda_=data["lambda"],
            x_valuation=data["x_valuation"],
            level=data["level"],
            verdict=data["verdict"],
            precision_used=data["precision_used"],
            stability=data["stable"],
            generator=tuple(data["generator"]),
            seed=data.get("seed"),
        )
