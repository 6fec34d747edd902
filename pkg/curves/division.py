"""
Division polynomials of y^2 = x^3 + Ax + B
psi_m = g_m for odd m and 2y * g_m for even m, with g_m a polynomial in x
"""
from functools import lru_cache
from typing import Dict

from sympy import Expr, Poly, expand, symbols, sympify

x, y, a = symbols("x y a")


@lru_cache(maxsize=64)
def _reduced(m: int, A: Expr, B: Expr) -> Dict[int, Expr]:
    """g_0 .. g_m, where y^2 has been replaced by x^3 + Ax + B"""
    F = 4 * (x ** 3 + A * x + B)  # (2y)^2
    g = {
        0: sympify(0),
        1: sympify(1),
        2: sympify(1),
        3: expand(3 * x ** 4 + 6 * A * x ** 2 + 12 * B * x - A ** 2),
        4: expand(2 * (x ** 6 + 5 * A * x ** 4 + 20 * B * x ** 3 - 5 * A ** 2 * x ** 2
                       - 4 * A * B * x - 8 * B ** 2 - A ** 3)),
    }
    for k in range(5, m + 1):
        j = k // 2
        if k % 2:
            if j % 2 == 0:
                value = F ** 2 * g[j + 2] * g[j] ** 3 - g[j - 1] * g[j + 1] ** 3
            else:
                value = g[j + 2] * g[j] ** 3 - F ** 2 * g[j - 1] * g[j + 1] ** 3
        else:
            value = g[j] * (g[j + 2] * g[j - 1] ** 2 - g[j - 2] * g[j + 1] ** 2)
        g[k] = expand(value)
    return g


def torsion_polynomial(m: int, A=0, B=a) -> Poly:
    """The x-part g_m; for odd m its roots are the x-coordinates of nonzero m-torsion"""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return Poly(_reduced(m, sympify(A), sympify(B))[m], x)


def division_polynomial(m: int, A=0, B=a) -> Expr:
    """psi_m in x and y"""
    g = torsion_polynomial(m, A, B).as_expr()
    if m % 2 == 0:
        return 2 * y * g
    return g
