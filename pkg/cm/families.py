"""
Families of CM curves whose reduction has exactly p points, and related checks
"""
from typing import Any, Dict, List

from config import ANOMALOUS_FAMILIES, GAUSSIAN_FAMILY
from cm.formulas import count_formula_class_one, count_formula_eisenstein, split_frobenius
from finitefields.counting import count_points, trace_of_frobenius


def check_family(name: str) -> Dict[str, Any]:
    """Enumerate the reduction of a registered family y^2 = x^3 + Ax + B + p*t"""
    if name not in ANOMALOUS_FAMILIES:
        raise KeyError(f"unknown family {name!r}; known: {sorted(ANOMALOUS_FAMILIES)}")
    family = ANOMALOUS_FAMILIES[name]
    p = family["p"]
    count = count_points(family["A"], family["B"], p)
    return {
        "name": name,
        "D": family["D"],
        "p": p,
        "A": family["A"],
        "B": family["B"],
        "count": count,
        "anomalous": count == p,
    }


def quadratic_divisibility(A: int, B: int, p: int) -> Dict[str, Any]:
    """Counts over F_p and F_{p^2}, and whether p divides the latter"""
    a_p = trace_of_frobenius(A, B, p)
    count_p2 = count_points(A, B, p * p)
    return {
        "p": p,
        "count_p": p + 1 - a_p,
        "count_p2": count_p2,
        "divisible": count_p2 % p == 0,
        # #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p)
        "frobenius_relation": count_p2 == p * p + 1 - (a_p * a_p - 2 * p),
    }


def anomalous_residue_classes(p: int) -> List[int]:
    """The c in F_p^x for which y^2 = x^3 + c has exactly p points over F_p"""
    return [c for c in range(1, p) if count_formula_eisenstein(c, p) == p]


def trace_is_even(D: int, p: int, a_p: int) -> bool:
    """For D in {-1, -2} the Frobenius is a + b*sqrt(D), so its trace 2a is even"""
    return split_frobenius(D, p, a_p).trace() % 2 == 0


def check_gaussian_family() -> Dict[str, Any]:
    """y^2 = x^3 + (3 + 5n)x reduces to one curve at p = 5; p divides its F_25 count"""
    family = GAUSSIAN_FAMILY
    result = quadratic_divisibility(family["A"], family["B"], family["p"])
    result["D"] = family["D"]
    result["trace_even"] = trace_is_even(family["D"], family["p"], family["p"] + 1 - result["count_p"])
    return result


def class_one_anomalous_classes(D: int, p: int) -> List[int]:
    """The c in F_p^x whose twist of the base model for D has exactly p points"""
    return [c for c in range(1, p) if count_formula_class_one(c, p, D) == p]
