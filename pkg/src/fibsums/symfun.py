"""Elementary symmetric functions of the m-th powers of the roots of
z^k - x z^(k-1) - s, computed from companion-matrix traces and Newton's
identities, together with the cyclotomic-product oracle that produces the
same polynomials without sharing any code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .cyclo import CycloElt, product
from .polycore import MPoly, UPoly, binom, ceil_div, floor_div
from .reports import CheckResult

__all__ = [
    "Companion",
    "companion",
    "elem_sym",
    "p_sym",
    "sym_window",
    "phi_product",
    "b_coeffs",
    "verify_eq28",
    "dangelo_f",
]

XS = ("x", "s")
X = MPoly.var("x", XS)
S = MPoly.var("s", XS)
ZERO = MPoly(XS)
ONE = MPoly.const(1, XS)

Matrix = List[List[MPoly]]


@dataclass(frozen=True)
class Companion:
    k: int
    matrix: Tuple[Tuple[MPoly, ...], ...]


def companion(k: int) -> Companion:
    """Companion matrix of z^k - x z^(k-1) - s (subdiagonal ones, last column s,0,..,0,x)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    rows = [[ZERO] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = ONE
    rows[0][k - 1] = S
    rows[k - 1][k - 1] = rows[k - 1][k - 1] + X
    return Companion(k, tuple(tuple(r) for r in rows))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for t in range(n):
                if a[i][t].terms and b[t][j].terms:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _matpow(a: Matrix, e: int) -> Matrix:
    result = _identity(len(a))
    base = a
    while e:
        if e & 1:
            result = _matmul(result, base)
        e >>= 1
        if e:
            base = _matmul(base, base)
    return result


def _trace(a: Matrix) -> MPoly:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


@lru_cache(maxsize=None)
def _power_sums(k: int, m: int) -> Tuple[MPoly, ...]:
    """tr(C^(m j)) for j = 1..k."""
    cm = _matpow([list(r) for r in companion(k).matrix], m)
    sums = []
    acc = cm
    for j in range(1, k + 1):
        if j > 1:
            acc = _matmul(acc, cm)
        sums.append(_trace(acc))
    return tuple(sums)


@lru_cache(maxsize=None)
def _elem_syms(k: int, m: int) -> Tuple[MPoly, ...]:
    p = _power_sums(k, m)
    e = [ONE]
    for r in range(1, k + 1):
        acc = ZERO
        for j in range(1, r + 1):
            term = e[r - j] * p[j - 1]
            acc = acc + (term if j % 2 else -term)
        val = acc * Fraction(1, r)
        if not val.is_integral():
            raise ArithmeticError(
                f"Newton recursion left a non-integer coefficient in e_{r},k={k},m={m}")
        e.append(val)
    return tuple(e)


def elem_sym(i: int, k: int, m: int) -> MPoly:
    """e_{i,k,m}(x, s)."""
    if k < 2 or m < 0 or not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, k >= 2, m >= 0; got i={i}, k={k}, m={m}")
    return _elem_syms(k, m)[i]


def sym_window(i: int, k: int, m: int) -> Tuple[int, int]:
    """Admissible s-exponents j for p_i(m,k): ceil((i-1)m/k) <= j <= floor(im/k)."""
    return ceil_div((i - 1) * m, k), floor_div(i * m, k)


def p_sym(i: int, m: int, k: int) -> MPoly:
    """p_i(m, k, x, s) = (-1)^(i+1) e_{i,k,m}(x, s) for 1 <= i <= k-1.

    Each term must be a(m,k,j) s^j x^(im-kj) with j inside :func:`sym_window`.
    """
    if not 1 <= i <= k - 1:
        raise ValueError(f"p_sym needs 1 <= i <= k-1, got i={i}, k={k}")
    e = elem_sym(i, k, m)
    val = e if i % 2 else -e
    lo, hi = sym_window(i, k, m)
    for (xe, se), _ in val.items():
        if not (lo <= se <= hi and xe == i * m - k * se):
            raise ArithmeticError(
                f"p_{i}({m},{k}) has a term s^{se} x^{xe} outside the window [{lo}, {hi}]")
    return val


# --- cyclotomic oracles ------------------------------------------------------

_XSZ = ("x", "s", "z")


def phi_product(k: int, m: int) -> UPoly:
    """Expand prod_{j<m} (1 - w^j x z - w^(kj) s z^k) over Z[w_m] and return it
    as a polynomial in z over Z[x, s].  Any leftover w-dependence is an error."""
    if k < 2 or not 1 <= m <= 8:
        raise ValueError("phi_product supports k >= 2 and 1 <= m <= 8")
    x, s, z = (MPoly.var(v, _XSZ) for v in _XSZ)
    one = MPoly.const(1, _XSZ)
    factors = [
        CycloElt.from_powers(m, {0: one}) - CycloElt.omega(m, j, x * z)
        - CycloElt.omega(m, k * j, s * z ** k)
        for j in range(m)
    ]
    prod = product(factors, m)
    return prod.rational_value().to_upoly("z")


def b_coeffs(m: int, k: int) -> Tuple[int, ...]:
    """Integer coefficients b_1..b_m of prod_{j=1}^m (z - w^(-kj) (w^j - 1))."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    zv = ("z",)
    z = MPoly.var("z", zv)
    one = MPoly.const(1, zv)
    factors = [
        CycloElt.omega(m, 0, z) - CycloElt.omega(m, j - k * j, one) + CycloElt.omega(m, -k * j, one)
        for j in range(1, m + 1)
    ]
    poly = product(factors, m).rational_value().to_upoly("z")
    coeffs = [c for c in poly]
    coeffs += [0] * (m + 1 - len(coeffs))
    if any(not isinstance(c, int) for c in coeffs):
        raise ArithmeticError(f"non-integer b coefficient for m={m}, k={k}")
    if coeffs[0] != 0:
        raise ArithmeticError(f"constant term {coeffs[0]} should vanish (m={m}, k={k})")
    return tuple(coeffs[1:])


def verify_eq28(m: int, k: int) -> CheckResult:
    """(-1)^(k(m-1)) sum_j b_j x^j (1+x)^((-kj) mod m) == (x+1)^m - 1."""
    if m < 2:
        raise ValueError("need m >= 2")
    b = b_coeffs(m, k)
    one_x = UPoly("x", [1, 1])
    lhs = UPoly("x")
    for j, bj in enumerate(b, start=1):
        lhs = lhs + UPoly.monomial("x", j, bj) * one_x ** ((-k * j) % m)
    if (k * (m - 1)) % 2:
        lhs = -lhs
    rhs = one_x ** m - 1
    residual = lhs - rhs
    return CheckResult("eq28", {"m": m, "k": k}, residual.is_zero(),
                       "" if residual.is_zero() else f"residual {residual}")


def dangelo_f(m: int, k: int) -> MPoly:
    """f = 1 - prod_{j<m} (1 - w^j x - w^(kj) y), checked against its four
    defining properties; a failing property raises ArithmeticError."""
    if not 1 <= m <= 8 or k < 1:
        raise ValueError("dangelo_f supports 1 <= m <= 8, k >= 1")
    xy = ("x", "y")
    x, y = MPoly.var("x", xy), MPoly.var("y", xy)
    one = MPoly.const(1, xy)
    factors = [
        CycloElt.from_powers(m, {0: one}) - CycloElt.omega(m, j, x)
        - CycloElt.omega(m, k * j, y)
        for j in range(m)
    ]
    f = one - product(factors, m).rational_value()
    f = f.to_integral()
    if f.evaluate({"x": 0, "y": 0}) != 0:
        raise ArithmeticError("f(0,0) != 0")
    on_line = f.subs({"y": one - x})
    if on_line != 1:
        raise ArithmeticError(f"f(x, 1-x) = {on_line}, expected 1")
    if f.degree() != m:
        raise ArithmeticError(f"deg f = {f.degree()}, expected {m}")
    for (a, b), _ in f.items():
        if (a + k * b) % m:
            raise ArithmeticError(f"monomial x^{a} y^{b} is not invariant (a + kb mod m != 0)")
    return f
