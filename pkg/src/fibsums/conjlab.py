"""Conjectured closed forms for the leading coefficients a(M, 4, j) of
p_2(M, 4, x, s), compared against the exact polynomials.

Disagreement is reported, never raised: these formulas are guesses from
computation, so the report is the product.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polycore import UPoly, binom
from .symfun import p_sym, sym_window

log = logging.getLogger(__name__)

__all__ = ["ConjFormula", "ConjEntry", "ConjReport", "FORMULAS", "extract_a",
           "check_conjectures"]


def _mpoly(*factors: Sequence[int]) -> UPoly:
    """Product of polynomials in m, each given by ascending coefficients."""
    out = UPoly("m", [1])
    for f in factors:
        out = out * UPoly("m", f)
    return out


@dataclass(frozen=True)
class ConjFormula:
    """a(4m + residue, 4, 2m + residue//2 - offset) = num(m) / prod(m - r) * C(m + top, bottom)."""

    name: str
    residue: int
    offset: int
    numerator: UPoly
    poles: Tuple[int, ...] = ()
    binomial: Optional[Tuple[int, int]] = None

    def first_arg(self, m: int) -> int:
        return 4 * m + self.residue

    def j(self, m: int) -> int:
        return 2 * m + self.residue // 2 - self.offset

    def is_pole(self, m: int) -> bool:
        return m in self.poles

    def evaluate(self, m: int) -> Fraction:
        if self.is_pole(m):
            raise ZeroDivisionError(f"{self.name} has a pole at m={m}")
        val = Fraction(self.numerator(m))
        for r in self.poles:
            val /= m - r
        if self.binomial is not None:
            top, bottom = self.binomial
            val *= binom(m + top, bottom)
        return val


FORMULAS: Tuple[ConjFormula, ...] = (
    ConjFormula("a(4m,4,2m)", 0, 0, _mpoly([-6])),
    ConjFormula("a(4m,4,2m-1)", 0, 1, _mpoly([0, 16]), (2,), (1, 4)),
    ConjFormula("a(4m,4,2m-2)", 0, 2, _mpoly([0, -16], [-15, 0, 4]), (-3, 3, 4), (3, 8)),
    ConjFormula("a(4m,4,2m-3)", 0, 3, _mpoly([0, 32], [-35, 0, 8]), (5, 6, 7), (4, 12)),
    ConjFormula("a(4m+2,4,2m+1)", 2, 0, _mpoly([2])),
    ConjFormula("a(4m+2,4,2m)", 2, 1, _mpoly([-1], [2, 4], [2, 4]), (1, 2), (1, 4)),
    ConjFormula("a(4m+2,4,2m-1)", 2, 2, _mpoly([4], [2, 4], [2, 4]), (3, 4), (3, 8)),
    ConjFormula("a(4m+2,4,2m-2)", 2, 3, _mpoly([2], [2, 4], [2, 4], [-105, 8, 8]),
                (4, 5, 6, 7), (4, 12)),
    ConjFormula("a(4m+1,4,2m)", 1, 0, _mpoly([0, -1], [1, 4])),
    ConjFormula("a(4m+1,4,2m-1)", 1, 1, _mpoly([2], [1, 4], [-3, 4]), (2, 3), (2, 6)),
    ConjFormula("a(4m+1,4,2m-2)", 1, 2, _mpoly([-8], [1, 4], [-10, 9, 4]), (4, 5, 6), (3, 10)),
    ConjFormula("a(4m+3,4,2m+1)", 3, 0, _mpoly([1, 1], [3, 4])),
    ConjFormula("a(4m+3,4,2m)", 3, 1, _mpoly([-2], [3, 4], [7, 4]), (2, 3), (2, 6)),
    ConjFormula("a(4m+3,4,2m-1)", 3, 2, _mpoly([8], [4, 1], [3, 4], [-15, -1, 4]),
                (3, 4, 5, 6), (3, 10)),
)


def extract_a(m_arg: int, j: int) -> int:
    """Coefficient a(m_arg, 4, j) of s^j x^(2 m_arg - 4 j) in p_2(m_arg, 4, x, s)."""
    if m_arg < 0:
        raise ValueError("m_arg must be nonnegative")
    lo, hi = sym_window(2, 4, m_arg)
    if not lo <= j <= hi:
        log.info("a(%d,4,%d): j outside [%d, %d], taken as 0", m_arg, j, lo, hi)
        return 0
    return p_sym(2, m_arg, 4).coeff(x=2 * m_arg - 4 * j, s=j)


@dataclass
class ConjEntry:
    m: int
    predicted: Optional[Fraction]
    actual: int
    match: bool
    pole: bool


@dataclass
class ConjReport:
    formula: str
    entries: List[ConjEntry] = field(default_factory=list)

    def matching_from(self) -> Optional[int]:
        """Smallest m such that every non-pole entry from m on matches, or None."""
        start = None
        for e in reversed(self.entries):
            if e.pole:
                continue
            if not e.match:
                break
            start = e.m
        return start

    def contiguous(self) -> bool:
        """Matches (ignoring poles) form one trailing block."""
        start = self.matching_from()
        matched = [e.m for e in self.entries if e.match and not e.pole]
        if not matched:
            return True
        return start is not None and all(m >= start for m in matched)

    def to_dict(self):
        return {
            "formula": self.formula,
            "matching_from": None if self.matching_from() is None else str(self.matching_from()),
            "contiguous": self.contiguous(),
            "entries": [
                {"m": str(e.m), "predicted": None if e.predicted is None else str(e.predicted),
                 "actual": str(e.actual), "match": e.match, "pole": e.pole}
                for e in self.entries
            ],
        }


def check_conjectures(m_max: int = 12, m_min: int = 0) -> List[ConjReport]:
    if m_max < 1:
        raise ValueError("m_max must be positive")
    reports = []
    for f in FORMULAS:
        rep = ConjReport(f.name)
        for m in range(m_min, m_max + 1):
            actual = extract_a(f.first_arg(m), f.j(m))
            if f.is_pole(m):
                rep.entries.append(ConjEntry(m, None, actual, False, True))
                continue
            pred = f.evaluate(m)
            rep.entries.append(ConjEntry(m, pred, actual, pred == actual, False))
        if not rep.contiguous():
            log.warning("%s: matches are not contiguous: %s", f.name,
                        [e.m for e in rep.entries if e.match])
        reports.append(rep)
    return reports


def reassemble(m_arg: int):
    """Rebuild p_2(m_arg, 4) from extracted coefficients (round-trip check)."""
    from .polycore import MPoly
    lo, hi = sym_window(2, 4, m_arg)
    out = MPoly(("x", "s"))
    for j in range(lo, hi + 1):
        a = extract_a(m_arg, j)
        if a:
            out = out + MPoly(("x", "s"), {(2 * m_arg - 4 * j, j): a})
    return out
