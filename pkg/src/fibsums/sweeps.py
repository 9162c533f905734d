"""Parameter sweeps behind ``fibsums verify``.

Each suite expands into independent cells ``(function name, args)``.  Cells
are evaluated by module-level functions so they can be farmed out to worker
processes; results are merged back in cell order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Tuple

from . import charrec, symfun
from .fibpoly import fib_k
from .reports import CheckResult, jsonable

Z_THM1 = (Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2))
Z_THM3 = (Fraction(-1), Fraction(1), Fraction(2))

SUITES = ("thm1", "thm3", "thm4", "thm5", "eq25", "eq28", "eq36", "factors", "subseq",
          "dangelo")

DEFAULTS = {
    "thm1": {"m_max": 9, "n_max": 40},
    "thm3": {"m_max": 7, "k_max": 4, "n_max": 40},
    "thm4": {"m_max": 6, "n_max": 40},
    "thm5": {"m_max": 6, "n_max": 40},
    "eq25": {"m_max": 6, "n_max": 20},
    "eq28": {"m_max": 10, "k_max": 5},
    "eq36": {"m_max": 6, "k_max": 4, "n_max": 30},
    "factors": {"m_max": 12},
    "subseq": {"m_max": 6, "n_max": 15},
    "dangelo": {"m_max": 8, "k_max": 5},
}


# --- cell evaluators ---------------------------------------------------------

def cell_thm1(m, l, z, n_max):
    p = charrec.charpoly_k2(m, z)
    return charrec.annihilates(p, charrec.binsum_sequence(2, m, l, z), 0, n_max,
                               label=f"thm1:A(2,{m},{l},{z})",
                               params={"k": 2, "m": m, "l": l, "z": z}).to_dict()


def cell_thm3(k, m, l, z, n_max):
    p = charrec.charpoly_general(k, m, z)
    return charrec.annihilates(p, charrec.binsum_sequence(k, m, l, z), 0, n_max,
                               label=f"thm3:A({k},{m},{l},{z})",
                               params={"k": k, "m": m, "l": l, "z": z}).to_dict()


def cell_short(m, parity, z_sign, l, n_max):
    period = 2 * m if parity == "even" else 2 * m + 1
    p = charrec.charpoly_simple(m, parity, z_sign)
    tag = "thm4" if z_sign == -1 else "thm5"
    return charrec.annihilates(p, charrec.binsum_sequence(2, period, l, z_sign), 0, n_max,
                               label=f"{tag}:A(2,{period},{l},{z_sign})",
                               params={"k": 2, "m": period, "l": l, "z": z_sign}).to_dict()


def cell_divides(m, parity, z_sign):
    period = 2 * m if parity == "even" else 2 * m + 1
    short = charrec.charpoly_simple(m, parity, z_sign).poly
    full = charrec.charpoly_k2(period, z_sign).poly
    q, r = divmod(full, short)
    tag = "thm4" if z_sign == -1 else "thm5"
    return CheckResult(f"{tag}:divides(period={period})",
                       {"period": period, "z": z_sign}, r.is_zero(),
                       "" if r.is_zero() else f"remainder {r}").to_dict()


def cell_eq25(m, l, z, n_max):
    return charrec.k1_check(m, l, z, n_max).to_dict()


def cell_eq28(m, k):
    return symfun.verify_eq28(m, k).to_dict()


def cell_eq36(k, m, l, z, n_max):
    rep = charrec.lemma2_check(charrec.psym_family(k, m), k, m, l, z, n_max)
    d = rep.to_dict()
    d["id"] = f"eq36:{d['id']}"
    return d


def cell_factors(m_max):
    return [r.to_dict() for r in charrec.factor_identities(m_max)]


def cell_subseq(m, r, n_max):
    q = charrec.subseq_charpoly(3, m).poly.map_coeffs(
        lambda c: c.evaluate({"x": 1, "s": 1}))
    seq = lambda n: fib_k(m * n + r + 1, 3).evaluate({"x": 1, "s": 1})
    return charrec.annihilates(q, seq, 0, n_max, label=f"subseq:k=3,m={m},r={r}",
                               params={"k": 3, "m": m, "r": r}).to_dict()


def cell_dangelo(m, k):
    try:
        f = symfun.dangelo_f(m, k)
        return CheckResult("dangelo", {"m": m, "k": k, "f": str(f)}, True).to_dict()
    except ArithmeticError as exc:
        return CheckResult("dangelo", {"m": m, "k": k}, False, str(exc)).to_dict()


# --- suite expansion ---------------------------------------------------------

def cells(suite: str, m_max=None, k_max=None, n_max=None) -> List[Tuple[str, tuple]]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    d = DEFAULTS[suite]
    M = m_max if m_max is not None else d.get("m_max")
    K = k_max if k_max is not None else d.get("k_max")
    N = n_max if n_max is not None else d.get("n_max")
    out = []
    if suite == "thm1":
        out = [("cell_thm1", (m, l, z, N)) for m in range(1, M + 1) for l in range(m)
               for z in Z_THM1]
    elif suite == "thm3":
        out = [("cell_thm3", (k, m, l, z, N)) for k in range(3, K + 1)
               for m in range(1, M + 1) for l in range(m) for z in Z_THM3]
    elif suite in ("thm4", "thm5"):
        zs = -1 if suite == "thm4" else 1
        for m in range(1, M + 1):
            for parity in ("even", "odd"):
                for l in range(-3, 2 * m + 4):
                    out.append(("cell_short", (m, parity, zs, l, N)))
                out.append(("cell_divides", (m, parity, zs)))
    elif suite == "eq25":
        out = [("cell_eq25", (m, l, z, N)) for m in range(1, M + 1) for l in range(-1, m + 1)
               for z in (Fraction(1), Fraction(-1), Fraction(1, 2))]
    elif suite == "eq28":
        out = [("cell_eq28", (m, k)) for m in range(2, M + 1) for k in range(1, K + 1)]
    elif suite == "eq36":
        out = [("cell_eq36", (k, m, l, z, N)) for k in range(2, K + 1)
               for m in range(1, M + 1) for l in range(m) for z in Z_THM3]
    elif suite == "factors":
        out = [("cell_factors", (M,))]
    elif suite == "subseq":
        out = [("cell_subseq", (m, r, N)) for m in range(1, M + 1) for r in range(m)]
    elif suite == "dangelo":
        out = [("cell_dangelo", (m, k)) for m in range(1, min(M, 8) + 1)
               for k in range(1, K + 1)]
    return out


def _run(task):
    name, args = task
    res = globals()[name](*args)
    return res if isinstance(res, list) else [res]


def run_suite(suite: str, m_max=None, k_max=None, n_max=None, jobs: int = 1) -> Dict:
    tasks = cells(suite, m_max, k_max, n_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_run, tasks))
    else:
        chunks = [_run(t) for t in tasks]
    flat = [c for chunk in chunks for c in chunk]
    failed = [c["id"] for c in flat if not c["pass"]]
    d = DEFAULTS[suite]
    params = {
        "m_max": m_max if m_max is not None else d.get("m_max"),
        "k_max": k_max if k_max is not None else d.get("k_max"),
        "n_max": n_max if n_max is not None else d.get("n_max"),
    }
    return {
        "suite": suite,
        "parameters": jsonable({k: v for k, v in params.items() if v is not None}),
        "cells": flat,
        "summary": {"cells": str(len(flat)), "passed": str(len(flat) - len(failed)),
                    "failed": str(len(failed)), "pass": not failed},
    }
