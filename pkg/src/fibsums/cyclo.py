"""Arithmetic in Z[w_m] = Z[t]/Phi_m(t), with coefficients that may be MPolys."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

from .polycore import MPoly, UPoly

__all__ = ["cyclotomic", "phi", "CycloElt"]


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> UPoly:
    """Phi_m(t), obtained by dividing t^m - 1 by Phi_d for the proper divisors d."""
    if m < 1:
        raise ValueError("m must be positive")
    p = UPoly("t", [-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p, r = divmod(p, cyclotomic(d))
            if not r.is_zero():
                raise ArithmeticError(f"Phi_{d} does not divide t^{m} - 1")
    return p


def phi(m: int) -> int:
    return cyclotomic(m).degree


@lru_cache(maxsize=None)
def _power_table(m: int) -> Tuple[Tuple[int, ...], ...]:
    # row r = coordinates of w^r in the power basis 1, w, ..., w^(phi(m)-1)
    mod = cyclotomic(m)
    n = mod.degree
    rows = []
    for r in range(m):
        rem = UPoly.monomial("t", r) % mod
        rows.append(tuple(int(rem[i]) for i in range(n)))
    return tuple(rows)


class CycloElt:
    """Element sum_i c_i w^i of Z[w_m] in the power basis (i < phi(m))."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence):
        n = phi(m)
        cs = list(coeffs)
        if len(cs) > n:
            raise ValueError("use CycloElt.from_powers for unreduced input")
        cs += [0] * (n - len(cs))
        self.m = m
        self.coeffs = tuple(cs)

    @classmethod
    def from_powers(cls, m: int, powers: dict) -> "CycloElt":
        """Build from {exponent of w: coefficient}; exponents are taken mod m."""
        table = _power_table(m)
        out = [0] * phi(m)
        for e, c in powers.items():
            row = table[e % m]
            for i, t in enumerate(row):
                if t:
                    out[i] = out[i] + t * c
        return cls(m, out)

    @classmethod
    def omega(cls, m: int, e: int = 1, coeff=1) -> "CycloElt":
        """coeff * w_m^e."""
        return cls.from_powers(m, {e: coeff})

    def _coerce(self, other) -> "CycloElt":
        if isinstance(other, CycloElt):
            if other.m != self.m:
                raise ValueError("cyclotomic orders differ")
            return other
        return CycloElt(self.m, [other])

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElt(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, CycloElt):
            return CycloElt(self.m, [c * other for c in self.coeffs])
        other = self._coerce(other)
        acc = {}
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                e = (i + j) % self.m
                acc[e] = acc.get(e, 0) + a * b
        return CycloElt.from_powers(self.m, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_rational(self) -> bool:
        """True when every non-constant coordinate vanishes."""
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ArithmeticError(f"element still depends on w_{self.m}: {self}")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycloElt({self.m}, {[str(c) for c in self.coeffs]})"


def product(factors, m: int) -> CycloElt:
    acc = CycloElt(m, [1])
    for f in factors:
        acc = acc * f
    return acc
