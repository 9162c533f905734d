"""Binomial sums A_n(k, m, l, z) = sum_h C(n, floor((n + m h + l) / k)) z^h.

Also two combinatorial oracles that count the same numbers a different
way: lattice paths in a horizontal strip and walks on a cycle graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .polycore import binom, ceil_div, floor_div

__all__ = ["SumSpec", "a_sum", "a_row", "support", "strip_paths", "cyclic_walks"]


@dataclass(frozen=True)
class SumSpec:
    k: int
    m: int
    l: int
    z: Fraction

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError(f"need k >= 1 and m >= 1, got k={self.k}, m={self.m}")
        z = Fraction(self.z)
        if z == 0:
            raise ValueError("z = 0 is not supported (negative powers of z occur)")
        object.__setattr__(self, "z", z)

    @classmethod
    def of(cls, k: int, m: int, l: int, z) -> "SumSpec":
        return cls(k, m, l, Fraction(z))


def support(n: int, spec: SumSpec) -> Tuple[int, int]:
    """Inclusive range of h for which the binomial can be nonzero.

    0 <= floor((n+mh+l)/k) <= n  holds exactly when  0 <= n+mh+l <= k(n+1)-1,
    so  ceil((-n-l)/m) <= h <= floor((k(n+1)-1-n-l)/m).  The range may be empty.
    """
    lo = ceil_div(-n - spec.l, spec.m)
    hi = floor_div(spec.k * (n + 1) - 1 - n - spec.l, spec.m)
    return lo, hi


def _a_sum(n: int, spec: SumSpec, widen: int = 0) -> Fraction:
    lo, hi = support(n, spec)
    total = Fraction(0)
    for h in range(lo - widen, hi + widen + 1):
        r = floor_div(n + spec.m * h + spec.l, spec.k)
        c = binom(n, r)
        if c:
            total += c * spec.z ** h
    return total


@lru_cache(maxsize=65536)
def a_sum(n: int, spec: SumSpec) -> Fraction:
    """Exact value of A_n(k, m, l, z) for n >= 0."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _a_sum(n, spec)


def a_row(spec: SumSpec, n_max: int) -> List[Fraction]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return [a_sum(n, spec) for n in range(n_max + 1)]


def strip_paths(n: int, m: int) -> int:
    """Paths with floor(n/2) steps (1,1) and floor((n+1)/2) steps (1,-1) from the
    origin, staying in -floor((m-1)/2) <= y <= floor((m-2)/2)."""
    if n < 0 or m < 3:
        raise ValueError("need n >= 0 and m >= 3")
    lo, hi = -((m - 1) // 2), (m - 2) // 2
    target = n // 2 - (n + 1) // 2
    counts = {0: 1}
    for _ in range(n):
        nxt = {}
        for y, c in counts.items():
            for y2 in (y + 1, y - 1):
                if lo <= y2 <= hi:
                    nxt[y2] = nxt.get(y2, 0) + c
        counts = nxt
    return counts.get(target, 0)


def cyclic_walks(length: int, nodes: int, closed: bool = True) -> int:
    """Walks of the given length on the cycle graph C_nodes starting at vertex 0,
    ending at 0 (closed) or at the neighbour 1 (open).

    Each step moves by +1 or -1 mod nodes, so C_2 carries a double edge.
    """
    if length < 0 or nodes < 2:
        raise ValueError("need length >= 0 and nodes >= 2")
    vec = [0] * nodes
    vec[0] = 1
    for _ in range(length):
        vec = [vec[(i - 1) % nodes] + vec[(i + 1) % nodes] for i in range(nodes)]
    return vec[0 if closed else 1]
