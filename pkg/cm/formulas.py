"""
Frobenius splitting p = pi * conj(pi) and CM point-count formulas
Every formula here is checked against enumeration, never the other way round
"""
import logging
from itertools import product
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import nextprime
from sympy.ntheory import sqrt_mod
from sympy.solvers.diophantine.diophantine import cornacchia

from config import (
    CLASS_ONE_CONVENTIONS,
    CLASS_ONE_DISCRIMINANTS,
    CLASS_ONE_J_INVARIANTS,
    CLASS_ONE_MODELS,
    CONVENTION_SIGNS,
    CONVENTION_SYMBOLS,
    CONVENTION_U_RULES,
)
from cm.quadint import QuadInt, units
from curves.weierstrass import Curve
from errors import (
    BadPrime,
    ConsistencyFailure,
    InputError,
    NoPrimaryRepresentative,
    NotCoprime,
    NotRepresentable,
    NotSplit,
    TraceMismatch,
)
from finitefields.counting import count_points, legendre
from padic.hensel import sqrt
from padic.numbers import PadicNumber, embed

logger = logging.getLogger(__name__)

SPLIT_CHECK_PRECISION = 8


def least_sqrt(D: int, p: int) -> int:
    """The square root of D mod p with least non-negative residue"""
    roots = sqrt_mod(D % p, p, all_roots=True) or []
    if not roots:
        raise NotSplit(f"{D} is not a square modulo {p}")
    return min(int(r) for r in roots)


def sqrt_embedding(D: int, p: int, precision: int) -> PadicNumber:
    """sqrt(D) in Z_p on the branch of the least residue root"""
    return sqrt(embed(D, p, precision), least_sqrt(D, p))


def padic_image(alpha: QuadInt, root: PadicNumber) -> PadicNumber:
    """alpha in Z_p, given the image of sqrt(D)"""
    if alpha.D in (-1, -2):
        return alpha.a + alpha.b * root
    return alpha.a + alpha.b * ((root - 1) / 2)


def split_frobenius(D: int, p: int, a_p: int, precision: int = SPLIT_CHECK_PRECISION) -> QuadInt:
    """
    The Frobenius pi in Z[w_D]: pi + conj(pi) = a_p, pi * conj(pi) = p and
    pi maps to 0 in F_p under sqrt(D) -> least_sqrt(D, p).
    The choice is confirmed in Z_p, where pi has valuation exactly 1.
    """
    if p % 2 == 0:
        raise BadPrime(f"p = {p} must be odd")
    if legendre(D, p) != 1:
        raise NotSplit(f"{p} does not split in Q(sqrt({D}))")
    disc = a_p * a_p - 4 * p
    if disc >= 0 or disc % D:
        raise TraceMismatch(f"a_p^2 - 4p = {disc} is not D times a square")
    v = isqrt(disc // D)
    if v == 0 or v * v != disc // D:
        raise TraceMismatch(f"a_p^2 - 4p = {disc} is not D times a nonzero square")
    root = least_sqrt(D, p)
    for sign in (1, -1):
        try:
            candidate = QuadInt.from_half(D, a_p, sign * v)
        except ValueError as exc:
            raise TraceMismatch(str(exc)) from exc
        if candidate.residue(p, root) == 0:
            image = padic_image(candidate, sqrt_embedding(D, p, precision))
            if image.valuation != 1:
                raise ConsistencyFailure(f"v_{p}({candidate}) = {image.valuation}, expected 1")
            return candidate
    raise TraceMismatch(f"neither root of x^2 - {a_p}x + {p} reduces to 0")


def primary_normalize(pi: QuadInt) -> QuadInt:
    """The associate of pi congruent to 1 modulo 3 in Z[w]"""
    if pi.D != -3:
        raise ValueError("primary elements are defined for D = -3")
    for unit in units(-3):
        candidate = unit * pi
        if candidate.mod(3) == (1, 0):
            return candidate
    raise NoPrimaryRepresentative(f"no associate of {pi} is congruent to 1 mod 3")


def _residue_of_w(pi: QuadInt) -> int:
    """Image of w in Z[w]/pi = F_p"""
    p = pi.norm()
    return (-pi.a * pow(pi.b, -1, p)) % p


def sixth_power_residue(a: int, pi0: QuadInt) -> QuadInt:
    """The unit congruent to a^((p-1)/6) modulo pi0"""
    p = pi0.norm()
    if gcd(a, p) != 1:
        raise NotCoprime(f"{a} shares a factor with {p}")
    target = pow(a, (p - 1) // 6, p)
    w = _residue_of_w(pi0)
    for unit in units(-3):
        if (unit.a + unit.b * w) % p == target:
            return unit
    raise ConsistencyFailure(f"{a}^((p-1)/6) mod {pi0} is not a sixth root of unity")


def represent_norm_form(D: int, p: int) -> Tuple[int, int]:
    """(u, v) with 4p = u^2 - D v^2, u >= 0 and v >= 1 smallest"""
    # primitive solutions of 4p, plus twice those of p
    solutions = set(cornacchia(1, -D, 4 * p) or ())
    solutions |= {(2 * x, 2 * y) for x, y in cornacchia(1, -D, p) or ()}
    solutions = [(int(u), int(v)) for u, v in solutions if v >= 1]
    if not solutions:
        raise NotRepresentable(f"4*{p} is not of the form u^2 - ({D})v^2")
    return min(solutions, key=lambda s: (s[1], s[0]))


def eisenstein_primes(p: int) -> Tuple[QuadInt, QuadInt]:
    """Primary pi0 and its conjugate for p = 1 mod 3"""
    u, v = represent_norm_form(-3, p)
    pi0 = primary_normalize(QuadInt.from_half(-3, u, v))
    conj = pi0.conj()
    if conj.mod(3) != (1, 0):
        raise NoPrimaryRepresentative(f"the conjugate of {pi0} is not primary")
    return pi0, conj


def count_formula_eisenstein(c: int, p: int) -> int:
    """#E(F_p) for y^2 = x^3 + c via sixth power residue symbols"""
    if p % 3 != 1 or (6 * c) % p == 0:
        raise BadPrime(f"need p = 1 mod 3 and p not dividing 6c, got p = {p}, c = {c}")
    pi0, conj = eisenstein_primes(p)
    value = p + 1 - sixth_power_residue(4 * c, pi0) * conj - sixth_power_residue(4 * c, conj) * pi0
    if not value.is_rational():
        raise ConsistencyFailure(f"formula value {value} is not a rational integer")
    return value.a


def signed_u(u: int, rule: str) -> int:
    if rule == "positive":
        return u
    if rule == "negative":
        return -u
    if rule == "one_mod_four":
        return u if u % 4 == 1 else -u
    if rule == "three_mod_four":
        return u if u % 4 == 3 else -u
    raise ValueError(f"unknown sign rule {rule!r}")


def class_one_model(D: int, c: int = 1) -> Tuple[int, int]:
    """
    (A c^2, B c^3) for the quadratic twist by c of the base CM curve: the
    conductor D^2 model for D in {-43, -67, -163}, otherwise the model with
    A = 3j(1728 - j), B = 2j(1728 - j)^2.
    """
    if D in CLASS_ONE_MODELS:
        A, B = CLASS_ONE_MODELS[D]
    else:
        j = CLASS_ONE_J_INVARIANTS[D]
        A, B = 3 * j * (1728 - j), 2 * j * (1728 - j) ** 2
    return A * c ** 2, B * c ** 3


def cm_curve(D: int, c: int = 1) -> Curve:
    """A curve with CM by the maximal order of Q(sqrt(D))"""
    if D == -3:
        return Curve(0, c)
    if D == -1:
        return Curve(c, 0)
    return Curve(*class_one_model(D, c))


def _trace_symbol(D: int, p: int, u: int, symbol: str) -> int:
    if symbol == "mod_d":
        return legendre(2 * u, -D)
    if symbol == "mod_p":
        return legendre(2, p) * legendre(u, p)
    raise ValueError(f"unknown trace symbol {symbol!r}")


def _formula_value(c: int, p: int, D: int, u: int, convention: Dict) -> int:
    us = signed_u(u, convention["u_rule"])
    return p + 1 - convention["sign"] * _trace_symbol(D, p, us, convention["symbol"]) * legendre(c, p) * us


def count_formula_class_one(c: int, p: int, D: int, convention: Optional[Dict] = None) -> int:
    """#E(F_p) for the twist by c of the base model, with the frozen convention for D"""
    if convention is None:
        if D not in CLASS_ONE_CONVENTIONS:
            raise NotRepresentable(f"no sign convention recorded for D = {D}")
        convention = CLASS_ONE_CONVENTIONS[D]
    if (2 * c * D) % p == 0:
        raise BadPrime(f"p = {p} divides 2cD")
    u, _ = represent_norm_form(D, p)
    return _formula_value(c, p, D, u, convention)


def admissible_split_primes(D: int, count: int = 8) -> List[int]:
    """Smallest primes p >= 5 split in Q(sqrt(D)) where the base model has good reduction"""
    A, B = class_one_model(D)
    disc = 4 * A ** 3 + 27 * B ** 2
    primes = []
    p = 3
    while len(primes) < count:
        p = int(nextprime(p))
        if disc % p and legendre(D, p) == 1:
            primes.append(p)
    return primes


def resolve_class_one_convention(
    D: int, primes: Optional[Sequence[int]] = None, symbols: Sequence[str] = CONVENTION_SYMBOLS
) -> Optional[Dict]:
    """
    First (symbol, u_rule, sign) in search order for which the formula matches
    enumeration for every c on the given primes; None when nothing matches.
    """
    primes = tuple(primes or admissible_split_primes(D))
    norm_forms = {p: represent_norm_form(D, p)[0] for p in primes}
    counts = {
        (p, c): count_points(*[t % p for t in class_one_model(D, c)], p)
        for p in primes
        for c in range(1, p)
    }
    for symbol, rule, sign in product(symbols, CONVENTION_U_RULES, CONVENTION_SIGNS):
        convention = {"symbol": symbol, "u_rule": rule, "sign": sign, "primes": primes}
        if all(_formula_value(c, p, D, norm_forms[p], convention) == counts[p, c] for p, c in counts):
            logger.debug("D = %d resolved to %s", D, convention)
            return convention
    return None


def conjugate_system_unsolvable(D: int, p: int) -> bool:
    """True iff x^2 = (1 + D)/4 and 2x = -1 have no common solution mod p"""
    if D == -1 or D == -2 or D not in CLASS_ONE_DISCRIMINANTS:
        raise InputError(f"D = {D} is not an odd class-number-one discriminant")
    if p % 2 == 0:
        raise BadPrime(f"p = {p} must be odd")
    if p == -D:
        raise BadPrime(f"p = {p} equals -D")
    x = (-pow(2, -1, p)) % p
    return (x * x - (1 + D) * pow(4, -1, p)) % p != 0
