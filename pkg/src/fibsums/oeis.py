"""Embedded OEIS prefixes for the sequences in play, plus a small b-file
client (fetch over HTTPS, parse, cache on disk) for longer comparisons."""

from __future__ import annotations

import logging
import os
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .binsum import SumSpec, a_row
from .fibpoly import fib_k, g_k, h_k

log = logging.getLogger(__name__)

CACHE_ENV = "FIBSUMS_CACHE_DIR"
BFILE_URL = "https://oeis.org/{id}/b{num}.txt"


def _row(m: int, z: int) -> Callable[[int], List[int]]:
    spec = SumSpec.of(2, m, 0, z)
    return lambda count: [int(v) for v in a_row(spec, count - 1)]


def _at_one(fn, k: int, shift: int = 0) -> Callable[[int], List[int]]:
    return lambda count: [fn(n + shift, k).evaluate({"x": 1, "s": 1}) for n in range(count)]


@dataclass(frozen=True)
class OeisFixture:
    oeis_id: str
    prefix: Tuple[int, ...]
    description: str
    compute: Callable[[int], List[int]]


FIXTURES: Tuple[OeisFixture, ...] = (
    OeisFixture("A000012", (1, 1, 1, 1, 1), "A_n(2,3,0,-1)", _row(3, -1)),
    OeisFixture("A016116", (1, 1, 2, 2, 4, 4, 8, 8), "A_n(2,4,0,-1)", _row(4, -1)),
    OeisFixture("A000045", (1, 1, 2, 3, 5, 8, 13, 21, 34, 55), "A_n(2,5,0,-1)", _row(5, -1)),
    OeisFixture("A182522", (1, 1, 2, 3, 6, 9, 18, 27, 54, 81, 162), "A_n(2,6,0,-1)", _row(6, -1)),
    OeisFixture("A028495", (1, 1, 2, 3, 6, 10, 19, 33, 61, 108, 197), "A_n(2,7,0,-1)",
                _row(7, -1)),
    OeisFixture("A030436", (1, 1, 2, 3, 6, 10, 20, 34, 68, 116, 232, 396), "A_n(2,8,0,-1)",
                _row(8, -1)),
    OeisFixture("A061551", (1, 1, 2, 3, 6, 10, 20, 35, 69, 124, 241, 440, 846),
                "A_n(2,9,0,-1)", _row(9, -1)),
    OeisFixture("A000079", (1, 2, 4, 8, 16, 32), "A_n(2,2,0,1)", _row(2, 1)),
    OeisFixture("A001045", (1, 1, 3, 5, 11, 21, 43, 85), "A_n(2,3,0,1)", _row(3, 1)),
    OeisFixture("A011782", (1, 1, 2, 4, 8, 16, 32, 64, 128), "A_n(2,4,0,1)", _row(4, 1)),
    OeisFixture("A099163", (1, 1, 2, 3, 7, 12, 27, 49, 106, 199), "A_n(2,5,0,1)", _row(5, 1)),
    OeisFixture("A005578", (1, 1, 2, 3, 6, 11, 22, 43, 86, 171, 342, 683), "A_n(2,6,0,1)",
                _row(6, 1)),
    OeisFixture("A000931", (1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12), "G_n^(3)(1,1) (Padovan)",
                _at_one(g_k, 3)),
    OeisFixture("A001608", (3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51),
                "H_n^(3)(1,1) (Perrin)", _at_one(h_k, 3)),
    OeisFixture("A000930", (1, 1, 1, 2, 3, 4, 6, 9, 13, 19), "F_(n+1)^(3)(1,1) (Narayana)",
                _at_one(fib_k, 3, shift=1)),
)

FIXTURES_BY_ID: Dict[str, OeisFixture] = {f.oeis_id: f for f in FIXTURES}


def parse_bfile(text: str) -> List[Tuple[int, int]]:
    """Parse "index value" lines; blank and '#' lines are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"b-file line {lineno}: expected 'index value', got {line!r}")
        out.append((int(parts[0]), int(parts[1])))
    return out


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "fibsums" / "oeis"


def bfile_url(oeis_id: str) -> str:
    return BFILE_URL.format(id=oeis_id, num=oeis_id[1:])


def fetch_bfile(oeis_id: str, cache_dir: Path | None = None, refresh: bool = False,
                offline: bool = False, opener=None, timeout: float = 20.0) -> Optional[str]:
    """Return b-file text from the cache, or fetch it (unless offline) and cache it.

    Returns None when the file is not cached and cannot be fetched.
    """
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = cache_dir / f"b{oeis_id[1:]}.txt"
    if path.exists() and not refresh:
        return path.read_text()
    if offline:
        return None
    opener = opener or urllib.request.urlopen
    url = bfile_url(oeis_id)
    try:
        with opener(url, timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError, ValueError) as exc:
        log.warning("could not fetch %s: %s", url, exc)
        return None
    cache_dir.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return text


def align(prefix: Sequence[int], values: Sequence[int]) -> Optional[int]:
    """Smallest shift d with values[d : d + len(prefix)] == prefix."""
    n = len(prefix)
    for d in range(len(values) - n + 1):
        if list(values[d:d + n]) == list(prefix):
            return d
    return None


def _first_diff(a: Sequence[int], b: Sequence[int]) -> Optional[int]:
    for i, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return i
    return None


def check_fixture(fx: OeisFixture, fetched: Optional[str] = None,
                  n_terms: int = 50) -> Dict:
    computed = fx.compute(max(n_terms, len(fx.prefix)))
    diff = _first_diff(computed, fx.prefix)
    result = {
        "id": fx.oeis_id,
        "description": fx.description,
        "source": "embedded",
        "embedded_match": diff is None,
        "embedded_first_diff": diff,
        "pass": diff is None,
    }
    if fetched is None:
        return result
    values = [v for _, v in parse_bfile(fetched)]
    shift = align(fx.prefix, values)
    result["source"] = "fetched"
    result["offset"] = shift
    if shift is None:
        result["fetched_match"] = False
        result["fetched_first_diff"] = 0
        result["note"] = "embedded prefix not found in b-file"
        result["pass"] = False
        return result
    window = values[shift:shift + n_terms]
    d = _first_diff(computed[:len(window)], window)
    result["fetched_match"] = d is None
    result["fetched_first_diff"] = d
    result["fetched_terms"] = len(window)
    result["pass"] = result["pass"] and d is None
    return result


def oeis_check(offline: bool = True, cache_dir: Path | None = None, refresh: bool = False,
               n_terms: int = 50, opener=None) -> Tuple[List[Dict], List[str]]:
    """Compare every fixture with the computed sequence (and the b-file, if available)."""
    results, warnings = [], []
    for fx in FIXTURES:
        text = None
        if not offline:
            text = fetch_bfile(fx.oeis_id, cache_dir, refresh=refresh, opener=opener)
            if text is None:
                warnings.append(f"{fx.oeis_id}: b-file unavailable, embedded check only")
        results.append(check_fixture(fx, text, n_terms))
    return results, warnings
