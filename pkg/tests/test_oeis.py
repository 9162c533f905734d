import io
import urllib.error

import pytest

from fibsums import oeis
from fibsums.oeis import (FIXTURES, FIXTURES_BY_ID, align, bfile_url, check_fixture, fetch_bfile,
                          oeis_check, parse_bfile)


class FakeResponse(io.BytesIO):
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def stub_opener(table, calls):
    def opener(url, timeout=None):
        calls.append(url)
        if url not in table:
            raise urllib.error.URLError("no route")
        return FakeResponse(table[url].encode())
    return opener


def bfile(values, start=0):
    return "# header\n\n" + "\n".join(f"{start + i} {v}" for i, v in enumerate(values)) + "\n"


def test_parse_bfile():
    assert parse_bfile("# c\n0 1\n1 -2\n\n2 30\n") == [(0, 1), (1, -2), (2, 30)]
    with pytest.raises(ValueError):
        parse_bfile("0 1\n7\n")


def test_align():
    assert align([1, 2, 3], [0, 0, 1, 2, 3, 4]) == 2
    assert align([1, 2], [2, 1]) is None
    assert align([], [5]) == 0


def test_url():
    assert bfile_url("A000045") == "https://oeis.org/A000045/b000045.txt"


def test_embedded_fixtures_all_match():
    results, warnings = oeis_check(offline=True)
    assert warnings == []
    assert len(results) == len(FIXTURES) == 15
    assert all(r["pass"] and r["source"] == "embedded" for r in results)


def test_offline_never_opens_network(tmp_path):
    calls = []
    (tmp_path / "b000045.txt").write_text(bfile([0, 1, 1, 2]))
    results, _ = oeis_check(offline=True, cache_dir=tmp_path, opener=stub_opener({}, calls))
    assert calls == []
    assert all(r["source"] == "embedded" for r in results)
    assert fetch_bfile("A000079", tmp_path, offline=True, opener=stub_opener({}, calls)) is None
    assert calls == []


def test_fetch_caches_and_refreshes(tmp_path):
    calls = []
    url = bfile_url("A000045")
    table = {url: bfile([0, 1, 1, 2, 3, 5])}
    opener = stub_opener(table, calls)
    text = fetch_bfile("A000045", tmp_path, opener=opener)
    assert parse_bfile(text)[-1] == (5, 5)
    assert (tmp_path / "b000045.txt").exists()
    fetch_bfile("A000045", tmp_path, opener=opener)
    assert calls == [url]
    fetch_bfile("A000045", tmp_path, refresh=True, opener=opener)
    assert calls == [url, url]


def test_fetch_failure_degrades(tmp_path):
    calls = []
    results, warnings = oeis_check(offline=False, cache_dir=tmp_path,
                                   opener=stub_opener({}, calls))
    assert len(calls) == 15 and len(warnings) == 15
    assert all(r["pass"] and r["source"] == "embedded" for r in results)


def test_fetched_fibonacci_offset_one(tmp_path):
    fx = FIXTURES_BY_ID["A000045"]
    fib = [0, 1]
    while len(fib) < 80:
        fib.append(fib[-1] + fib[-2])
    r = check_fixture(fx, bfile(fib), n_terms=50)
    assert r["source"] == "fetched" and r["offset"] == 1
    assert r["pass"] and r["fetched_terms"] == 50


def test_fetched_padovan_offset(tmp_path):
    # A000931 starts 1, 0, 0, 1, 0, 1, 1, 1, 2, ... so the embedded prefix sits at shift 3
    fx = FIXTURES_BY_ID["A000931"]
    pad = [1, 0, 0]
    while len(pad) < 70:
        pad.append(pad[-2] + pad[-3])
    r = check_fixture(fx, bfile(pad), n_terms=50)
    assert r["offset"] == 3 and r["pass"]


def test_fetched_contradiction_is_reported():
    fx = FIXTURES_BY_ID["A000079"]
    vals = [2 ** n for n in range(30)]
    vals[20] += 1
    r = check_fixture(fx, bfile(vals), n_terms=25)
    assert not r["pass"] and r["fetched_first_diff"] == 20
    r = check_fixture(fx, bfile([7, 7, 7, 7, 7, 7, 7]), n_terms=10)
    assert not r["pass"] and r["offset"] is None


def test_default_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path))
    assert oeis.default_cache_dir() == tmp_path
    monkeypatch.delenv(oeis.CACHE_ENV)
    assert oeis.default_cache_dir().name == "oeis"
