"""Fibonacci/Lucas polynomials and their order-k generalizations.

Every family is computed twice -- by its recurrence and by its binomial
closed form -- and the two are compared on each fresh value while
``CHECKED`` is true.  Off-by-one index shifts are the easy mistake with
these families, so the check stays on by default.

All results are :class:`MPoly` values on the variable list ``(x, s)``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .polycore import MPoly, UPoly, binom, floor_div, ceil_div

__all__ = [
    "XS",
    "CHECKED",
    "FAMILIES",
    "fib",
    "lucas",
    "fib_k",
    "lucas_k",
    "g_k",
    "h_k",
    "family",
    "CrossCheckError",
]

XS = ("x", "s")
X = MPoly.var("x", XS)
S = MPoly.var("s", XS)
ZERO = MPoly(XS)
ONE = MPoly.const(1, XS)

CHECKED = os.environ.get("FIBSUMS_UNCHECKED", "") in ("", "0")

FAMILIES = ("F", "L", "Fk", "Lk", "Gk", "Hk")


class CrossCheckError(AssertionError):
    """Recurrence and closed form disagree."""


def _mono(coeff, xe: int, se: int) -> MPoly:
    return MPoly(XS, {(xe, se): coeff})


def _check(name: str, n: int, k: int, a: MPoly, b: MPoly) -> None:
    if a != b:
        raise CrossCheckError(f"{name}(n={n}, k={k}): recurrence {a} != closed form {b}")


def _integral(q) -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return q.numerator


# --- recurrences -------------------------------------------------------------

class _RecCache:
    """Grow-only list of values filled by a recurrence; behaves as if absent."""

    def __init__(self, initial, step):
        self.values = list(initial)
        self.step = step

    def get(self, n: int) -> MPoly:
        while len(self.values) <= n:
            self.values.append(self.step(self.values, len(self.values)))
        return self.values[n]


@lru_cache(maxsize=None)
def _fib_rec(k: int) -> _RecCache:
    init = [ZERO] + [X ** (n - 1) for n in range(1, k)]
    return _RecCache(init, lambda v, n: X * v[n - 1] + S * v[n - k])


@lru_cache(maxsize=None)
def _lucas_rec(k: int) -> _RecCache:
    init = [MPoly.const(k, XS)] + [X ** n for n in range(1, k)]
    return _RecCache(init, lambda v, n: X * v[n - 1] + S * v[n - k])


def _reversed_step(k: int):
    a = S ** (k - 2) * X
    b = S ** (k - 1)

    def step(v, n):
        return a * v[n - (k - 1)] + b * v[n - k]
    return step


@lru_cache(maxsize=None)
def _g_rec(k: int) -> _RecCache:
    init = [ONE] + [ZERO] * (k - 2) + [S ** (k - 2) * X]
    return _RecCache(init, _reversed_step(k))


@lru_cache(maxsize=None)
def _h_rec(k: int) -> _RecCache:
    init = [MPoly.const(k, XS)] + [ZERO] * (k - 2) + [(k - 1) * S ** (k - 2) * X]
    return _RecCache(init, _reversed_step(k))


# --- closed forms ------------------------------------------------------------

def _fib_k_closed(n: int, k: int) -> MPoly:
    # value at index n+1
    out = ZERO
    for j in range(floor_div(n, k) + 1):
        c = binom(n - (k - 1) * j, j)
        if c:
            out = out + _mono(c, n - k * j, j)
    return out


def _lucas_k_closed(n: int, k: int) -> MPoly:
    out = ZERO
    for j in range(floor_div(n, k) + 1):
        top = n - (k - 1) * j
        c = binom(top, j)
        if c:
            out = out + _mono(_integral(Fraction(c * n, top)), n - k * j, j)
    return out


def _reversed_closed(n: int, k: int, lucas: bool) -> MPoly:
    """Closed form with j in [floor((k-2)n/k), (k-1)n/k] for G (lucas=False) or H."""
    out = ZERO
    lo = floor_div((k - 2) * n, k)
    hi = floor_div((k - 1) * n, k)
    for j in range(lo, hi + 1):
        xe = (k - 1) * n - k * j
        c = binom(n - j, xe)
        if not c:
            continue
        if lucas:
            c = _integral(Fraction(c * n, n - j))
        out = out + _mono(c, xe, j)
    return out


def _reversed_closed_alt(n: int, k: int, lucas: bool) -> MPoly:
    """Re-indexed form: sum over j of C(j, n-(k-1)j) s^(n-j) x^(kj-n)."""
    out = ZERO
    for j in range(0 if not lucas else 1, n + 1):
        c = binom(j, n - (k - 1) * j)
        if not c:
            continue
        if lucas:
            c = _integral(Fraction(c * n, j))
        out = out + _mono(c, k * j - n, n - j)
    return out


# --- public families ---------------------------------------------------------

def _validate(n: int, k: int = 2) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if k < 2:
        raise ValueError(f"order k must be at least 2, got {k}")


def fib(n: int) -> MPoly:
    """Fibonacci polynomial F_n(x, s)."""
    return fib_k(n, 2)


def lucas(n: int) -> MPoly:
    """Lucas polynomial L_n(x, s), with L_0 = 2."""
    return lucas_k(n, 2)


def fib_k(n: int, k: int) -> MPoly:
    """F_n^(k): F_n = x F_(n-1) + s F_(n-k), F_0 = 0, F_n = x^(n-1) for 0 < n < k."""
    _validate(n, k)
    v = _fib_rec(k).get(n)
    if CHECKED and n >= 1:
        _check("fib_k", n, k, v, _fib_k_closed(n - 1, k))
    return v


def lucas_k(n: int, k: int) -> MPoly:
    """L_n^(k), same recurrence as fib_k with L_0 = k and L_n = x^n for 0 < n < k.

    The closed form is only claimed (and only checked) for n >= k.
    """
    _validate(n, k)
    v = _lucas_rec(k).get(n)
    if CHECKED and n >= k:
        _check("lucas_k", n, k, v, _lucas_k_closed(n, k))
    return v


def g_k(n: int, k: int) -> MPoly:
    """G_n^(k) with generating function 1/(1 - s^(k-2) x z^(k-1) - s^(k-1) z^k)."""
    _validate(n, k)
    v = _g_rec(k).get(n)
    if CHECKED:
        _check("g_k", n, k, v, _reversed_closed(n, k, lucas=False))
        _check("g_k/alt", n, k, v, _reversed_closed_alt(n, k, lucas=False))
    return v


def h_k(n: int, k: int) -> MPoly:
    """H_n^(k), the Lucas analog of g_k; H_0 = k."""
    _validate(n, k)
    v = _h_rec(k).get(n)
    if CHECKED and n >= 1:
        _check("h_k", n, k, v, _reversed_closed(n, k, lucas=True))
        _check("h_k/alt", n, k, v, _reversed_closed_alt(n, k, lucas=True))
    return v


def family(tag: str, n: int, k: int = 2) -> MPoly:
    """Dispatch by family tag; F and L ignore k."""
    if tag == "F":
        return fib(n)
    if tag == "L":
        return lucas(n)
    fn = {"Fk": fib_k, "Lk": lucas_k, "Gk": g_k, "Hk": h_k}.get(tag)
    if fn is None:
        raise ValueError(f"unknown family {tag!r}; expected one of {FAMILIES}")
    return fn(n, k)


# --- generating functions ----------------------------------------------------

def gf_denominator(k: int, reversed_: bool = False) -> UPoly:
    """1 - x z - s z^k, or 1 - s^(k-2) x z^(k-1) - s^(k-1) z^k when reversed_."""
    cs = [ZERO] * (k + 1)
    cs[0] = ONE
    if reversed_:
        cs[k - 1] = cs[k - 1] - S ** (k - 2) * X
        cs[k] = cs[k] - S ** (k - 1)
    else:
        cs[1] = cs[1] - X
        cs[k] = cs[k] - S
    return UPoly("z", cs)


def series(fn, n_max: int, offset: int = 0) -> UPoly:
    """Truncated series sum_{n<=n_max} fn(n + offset) z^n."""
    return UPoly("z", [fn(n + offset) for n in range(n_max + 1)])
