"""Characteristic polynomials of the binomial-sum sequences and a generic
annihilation verifier.

A polynomial p(t) = sum c_i t^i annihilates a sequence f when
sum c_i f(n + i) = 0 for every n in the checked range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .binsum import SumSpec, a_sum
from .fibpoly import fib, fib_k, lucas
from .polycore import MPoly, UPoly, binom, normalize_scalar
from .reports import CheckResult, RecurrenceReport
from .symfun import elem_sym, p_sym

__all__ = [
    "CharPoly",
    "at_minus_one",
    "charpoly_k2",
    "charpoly_general",
    "charpoly_simple",
    "subseq_charpoly",
    "annihilates",
    "k1_check",
    "factor_identities",
    "operator_identity_check",
    "LemmaTerm",
    "unit_family",
    "psym_family",
    "bcoeff_family",
    "lemma2_check",
]


@dataclass(frozen=True)
class CharPoly:
    poly: UPoly
    source: str = ""

    def __post_init__(self):
        if self.poly.is_zero() or self.poly.degree < 1:
            raise ValueError(f"characteristic polynomial must have degree >= 1: {self.poly}")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self):
        return self.poly.coeffs

    def __str__(self):
        return str(self.poly)


def at_minus_one(p: MPoly, var: str = "t") -> UPoly:
    """p(t, -1) as an integer polynomial in t (x renamed to t, s set to -1)."""
    return p.subs({"s": -1}).to_upoly("x").map_coeffs(
        lambda c: c.constant_value() if isinstance(c, MPoly) else c).rename(var)


def charpoly_k2(m: int, z) -> CharPoly:
    """(1 + z^2) - z L_m(t, -1)."""
    if m < 1:
        raise ValueError("m must be positive")
    z = Fraction(z)
    p = (1 + z * z) - at_minus_one(lucas(m)) * z
    return CharPoly(p, f"k2(m={m}, z={z})")


def charpoly_general(k: int, m: int, z) -> CharPoly:
    """(1 + (-1)^(k(m-1)) z^k) - sum_{i=1}^{k-1} z^i p_i(m, k, t, -1)."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    z = Fraction(z)
    sign = -1 if (k * (m - 1)) % 2 else 1
    p = UPoly("t", [1 + sign * z ** k])
    for i in range(1, k):
        p = p - at_minus_one(p_sym(i, m, k)) * z ** i
    return CharPoly(p, f"general(k={k}, m={m}, z={z})")


def charpoly_simple(m: int, parity: str, z_sign: int) -> CharPoly:
    """Short annihilators for k = 2, z = +-1 (period 2m when parity is 'even',
    2m+1 when 'odd')."""
    if m < 1:
        raise ValueError("m must be positive")
    if parity not in ("even", "odd") or z_sign not in (1, -1):
        raise ValueError("parity must be 'even'/'odd' and z_sign +1/-1")
    t = UPoly("t", [0, 1])
    if z_sign == -1:
        p = (at_minus_one(lucas(m)) if parity == "even"
             else at_minus_one(fib(m + 1)) - at_minus_one(fib(m)))
    else:
        p = ((t - 2) * at_minus_one(fib(m)) if parity == "even"
             else at_minus_one(lucas(m + 1)) - at_minus_one(lucas(m)))
    period = 2 * m if parity == "even" else 2 * m + 1
    return CharPoly(p, f"short(period={period}, z={z_sign})")


def subseq_charpoly(k: int, m: int) -> CharPoly:
    """sum_{i=0}^k (-1)^i e_{i,k,m}(x, s) t^(k-i), coefficients in Z[x, s]."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    coeffs = [None] * (k + 1)
    for i in range(k + 1):
        e = elem_sym(i, k, m)
        coeffs[k - i] = e if i % 2 == 0 else -e
    return CharPoly(UPoly("t", coeffs), f"subseq(k={k}, m={m})")


def _poly_of(p) -> UPoly:
    return p.poly if isinstance(p, CharPoly) else p


def annihilates(p, f: Callable[[int], object], n_from: int, n_to: int,
                label: str = "", params: Dict | None = None) -> RecurrenceReport:
    """Check sum_i c_i f(n + i) == 0 for n_from <= n <= n_to.

    The report also carries the least n0 from which every residual through
    ``n_to`` vanishes, so a claim that only holds eventually is visible.
    """
    poly = _poly_of(p)
    if poly.is_zero():
        raise ValueError("the zero polynomial annihilates everything")
    cs = poly.coeffs
    values = {}

    def val(n):
        if n not in values:
            values[n] = f(n)
        return values[n]

    residuals = []
    for n in range(n_from, n_to + 1):
        r = 0
        for i, c in enumerate(cs):
            if c != 0:
                r = r + c * val(n + i)
        residuals.append((n, normalize_scalar(r) if not isinstance(r, MPoly) else r))
    bad = [(n, r) for n, r in residuals if r != 0]
    n0 = n_from
    for n, r in residuals:
        if r != 0:
            n0 = n + 1
    if n0 > n_to:
        n0 = None
    return RecurrenceReport(
        poly=str(poly), sequence=label, n_from=n_from, n_to=n_to,
        passed=not bad, n0=n0, counterexample=bad[0] if bad else None,
        params=dict(params or {}))


def binsum_sequence(k: int, m: int, l: int, z) -> Callable[[int], Fraction]:
    spec = SumSpec.of(k, m, l, z)
    return lambda n: a_sum(n, spec)


def k1_check(m: int, l: int, z, n_max: int) -> RecurrenceReport:
    """z sum_{j=0}^m (-1)^j C(m,j) A_(n+m-j)(1,m,l,z) == A_n(1,m,l,z)."""
    if m < 1:
        raise ValueError("m must be positive")
    z = Fraction(z)
    # as a polynomial in the shift operator: z (t - 1)^m - 1
    p = (UPoly("t", [-1, 1]) ** m) * z - 1
    return annihilates(p, binsum_sequence(1, m, l, z), 0, n_max,
                       label=f"A(1,{m},{l},{z})", params={"k": 1, "m": m, "l": l, "z": z})


def factor_identities(m_max: int) -> List[CheckResult]:
    """The four factorizations of L_n(x,-1) +- 2 for 1 <= n <= m_max."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    x = UPoly("x", [0, 1])
    L = lambda n: at_minus_one(lucas(n), "x")
    F = lambda n: at_minus_one(fib(n), "x")
    out = []
    for n in range(1, m_max + 1):
        cases = [
            ("L2n+2", L(2 * n) + 2, L(n) ** 2),
            ("L2n+1+2", L(2 * n + 1) + 2, (x + 2) * (F(n + 1) - F(n)) ** 2),
            ("L2n-2", L(2 * n) - 2, (x * x - 4) * F(n) ** 2),
            ("L2n+1-2", (x - 2) * (L(2 * n + 1) - 2), (L(n + 1) - L(n)) ** 2),
        ]
        for name, lhs, rhs in cases:
            diff = lhs - rhs
            out.append(CheckResult(name, {"n": n}, diff.is_zero(),
                                   "" if diff.is_zero() else f"residual {diff}"))
    return out


def operator_identity_check(m: int, x0: int, r: int) -> CheckResult:
    """sum_j C(m-j,j) m/(m-j) (-1)^j C(x0+m-2j, r-j) == C(x0, r-m) + C(x0, r)."""
    if m < 1 or x0 < 0:
        raise ValueError("need m >= 1 and x0 >= 0")
    lhs = 0
    for j in range(m // 2 + 1):
        w = Fraction(binom(m - j, j) * m, m - j)
        if w.denominator != 1:
            raise ArithmeticError(f"Lucas weight C({m - j},{j}) m/(m-j) is not integral")
        lhs += (-1) ** j * int(w) * binom(x0 + m - 2 * j, r - j)
    rhs = binom(x0, r - m) + binom(x0, r)
    return CheckResult("lucas_operator", {"m": m, "x0": x0, "r": r}, lhs == rhs,
                       "" if lhs == rhs else f"{lhs} != {rhs}")


# --- the shift lemma ---------------------------------------------------------

@dataclass(frozen=True)
class LemmaTerm:
    """One summand c * x^j * (1+x)^(i*m - k*j) of a vanishing combination."""

    c: int
    j: int
    i: int


def unit_family(m: int) -> List[LemmaTerm]:
    """-1 + sum_j C(m,j) (-1)^j x^j (1+x)^(m-j)   (k = 1)."""
    return [LemmaTerm(-1, 0, 0)] + [LemmaTerm((-1) ** j * binom(m, j), j, 1)
                                    for j in range(m + 1)]


def psym_family(k: int, m: int) -> List[LemmaTerm]:
    """sum_i p_i(m,k,x+1,-x) - 1 - (-1)^(k(m-1)) x^m, expanded into x^j (1+x)^(im-kj)."""
    terms = [LemmaTerm(-1, 0, 0)]
    for i in range(1, k):
        for (xe, se), a in p_sym(i, m, k).items():
            terms.append(LemmaTerm((-1) ** se * a, se, i))
    sign = -1 if (k * (m - 1)) % 2 else 1
    terms.append(LemmaTerm(-sign, m, k))
    return terms


def bcoeff_family(m: int, k: int) -> List[LemmaTerm]:
    """The b-coefficient identity, rewritten with exponents (-kj) mod m = i_j m - k j."""
    from .symfun import b_coeffs
    sign = -1 if (k * (m - 1)) % 2 else 1
    terms = [LemmaTerm(1, 0, 0), LemmaTerm(-1, 0, 1)]
    for j, b in enumerate(b_coeffs(m, k), start=1):
        if b:
            e = (-k * j) % m
            terms.append(LemmaTerm(sign * b, j, (e + k * j) // m))
    return terms


def _lemma_identity_residual(terms: Sequence[LemmaTerm], k: int, m: int) -> UPoly:
    x = UPoly("x", [0, 1])
    acc = UPoly("x")
    for t in terms:
        e = t.i * m - k * t.j
        if e < 0:
            raise ValueError(f"exponent i*m - k*j = {e} is negative for {t}")
        acc = acc + (x ** t.j) * (x + 1) ** e * t.c
    return acc


def lemma2_check(terms: Sequence[LemmaTerm], k: int, m: int, l: int, z,
                 n_max: int) -> RecurrenceReport:
    """Given sum c x^j (1+x)^(i m - k j) == 0 in Z[x], check
    sum c z^i A_(n + i m - k j)(k, m, l, z) == 0 for n = 0..n_max."""
    residual = _lemma_identity_residual(terms, k, m)
    if not residual.is_zero():
        raise ValueError(f"family does not vanish in Z[x]: residual {residual}")
    z = Fraction(z)
    coeffs: Dict[int, Fraction] = {}
    for t in terms:
        shift = t.i * m - k * t.j
        coeffs[shift] = coeffs.get(shift, 0) + t.c * z ** t.i
    deg = max(coeffs)
    p = UPoly("t", [coeffs.get(d, 0) for d in range(deg + 1)])
    seq = binsum_sequence(k, m, l, z)
    if p.is_zero():
        # every shift cancels: the identity holds trivially
        return RecurrenceReport("0", f"A({k},{m},{l},{z})", 0, n_max, True, 0,
                                params={"k": k, "m": m, "l": l, "z": z})
    return annihilates(p, seq, 0, n_max, label=f"A({k},{m},{l},{z})",
                       params={"k": k, "m": m, "l": l, "z": z})
