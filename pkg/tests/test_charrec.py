from fractions import Fraction

import pytest

from fibsums.binsum import SumSpec, a_sum
from fibsums.charrec import (CharPoly, LemmaTerm, annihilates, binsum_sequence, charpoly_general,
                             charpoly_k2, charpoly_simple, factor_identities, k1_check,
                             lemma2_check, operator_identity_check, psym_family,
                             bcoeff_family, subseq_charpoly, unit_family)
from fibsums.fibpoly import fib_k
from fibsums.polycore import UPoly
from fibsums.symfun import elem_sym

t = UPoly("t", [0, 1])
ONE = {"x": 1, "s": 1}


def test_charpoly_k2_examples():
    p = charpoly_k2(5, -1).poly
    assert p == t ** 5 - 5 * t ** 3 + 5 * t + 2
    assert p == (t + 2) * (t * t - t - 1) ** 2
    assert charpoly_k2(1, 1).poly == 2 - t


def test_charpoly_general_examples():
    assert charpoly_general(3, 2, -1).poly == t * t + 2 * t + 2
    assert charpoly_general(3, 4, -1).poly == t ** 4 + 2 * t ** 2 - 4 * t + 2
    assert charpoly_general(3, 5, -1).poly == t ** 5 - 5 * t ** 2 + 5 * t
    assert charpoly_general(3, 1, -1).poly == t
    assert charpoly_general(3, 3, -1).poly == t ** 3


def test_general_specializes_to_k2():
    for m in range(1, 11):
        for z in (-1, 1, 2, Fraction(1, 2)):
            assert charpoly_general(2, m, z).poly == charpoly_k2(m, z).poly


def test_charpoly_simple_examples():
    p = charpoly_simple(2, "odd", -1).poly
    assert p == t * t - t - 1
    assert annihilates(p, binsum_sequence(2, 5, 2, -1), 0, 40).passed
    assert charpoly_simple(1, "even", -1).poly == t
    assert annihilates(t, binsum_sequence(2, 2, 0, -1), 1, 30).passed
    q = charpoly_simple(2, "even", 1).poly
    assert q == (t - 2) * t
    assert annihilates(q, binsum_sequence(2, 4, 0, 1), 0, 30).passed
    with pytest.raises(ValueError):
        charpoly_simple(2, "both", 1)


def test_short_polys_divide_full_ones():
    for m in range(1, 7):
        for parity, period in (("even", 2 * m), ("odd", 2 * m + 1)):
            for z in (-1, 1):
                _, r = divmod(charpoly_k2(period, z).poly, charpoly_simple(m, parity, z).poly)
                assert r.is_zero()


def test_annihilates_examples():
    assert annihilates(charpoly_k2(5, -1), binsum_sequence(2, 5, 2, -1), 0, 40).passed
    rep = annihilates(charpoly_general(3, 4, -1), binsum_sequence(3, 4, 0, -1), 0, 40)
    assert rep.passed and rep.n0 == 0
    assert annihilates(t * t - t - 1, binsum_sequence(2, 5, 0, -1), 0, 40).passed


def test_k3_m4_listed_terms_from_index_one():
    spec = SumSpec.of(3, 4, 0, -1)
    assert [int(a_sum(n, spec)) for n in range(1, 12)] == [
        0, 0, 1, -2, -2, 8, -6, -20, 48, 0, -164]


def test_annihilates_reports_failure_and_n0():
    seq = lambda n: 5 if n == 0 else 0
    assert annihilates(t, seq, 0, 10).passed
    rep = annihilates(t - 1, seq, 0, 10)
    assert not rep.passed
    assert rep.counterexample == (0, -5)
    assert rep.n0 == 1
    d = rep.to_dict()
    assert d["pass"] is False and d["n0"] == "1"
    assert d["counterexample"] == {"n": "0", "residual": "-5"}
    with pytest.raises(ValueError):
        annihilates(UPoly("t"), seq, 0, 3)


def test_charpoly_rejects_constants():
    with pytest.raises(ValueError):
        CharPoly(UPoly("t", [3]))


@pytest.mark.parametrize("m, l, z", [(1, 0, 1), (3, 1, -1), (4, 0, Fraction(1, 2)),
                                     (5, -2, 2), (2, 7, -1)])
def test_k1_check(m, l, z):
    assert k1_check(m, l, z, 20).passed


def test_factor_identities():
    res = factor_identities(12)
    assert len(res) == 48 and all(r.passed for r in res)


def test_operator_identity():
    assert operator_identity_check(1, 5, 3).passed
    assert operator_identity_check(4, 10, 7).passed
    for n in range(31):
        assert operator_identity_check(5, n, (n + 2) // 2).passed
    for m in range(1, 9):
        for x0 in range(0, 12):
            for r in range(-2, 14):
                assert operator_identity_check(m, x0, r).passed


def test_lemma_psym_family():
    assert lemma2_check(psym_family(3, 4), 3, 4, 0, -1, 30).passed
    assert lemma2_check(psym_family(4, 3), 4, 3, 1, 1, 30).passed


def test_lemma_psym_family_equals_general_charpoly():
    # the shift polynomial built by the lemma is the general characteristic polynomial
    for k in (2, 3, 4):
        for m in range(1, 6):
            for z in (-1, 1, 2):
                for l in range(m):
                    assert lemma2_check(psym_family(k, m), k, m, l, z, 25).passed


def test_lemma_unit_and_bcoeff_families():
    for m in range(1, 6):
        for l in (-1, 0, 2):
            assert lemma2_check(unit_family(m), 1, m, l, 1, 20).passed
    for m in range(2, 7):
        for k in range(1, 4):
            assert lemma2_check(bcoeff_family(m, k), k, m, 0, -1, 20).passed


def test_lemma_rejects_nonvanishing_family():
    with pytest.raises(ValueError):
        lemma2_check([LemmaTerm(1, 0, 1)], 2, 3, 0, 1, 5)
    with pytest.raises(ValueError):
        lemma2_check([LemmaTerm(1, 3, 0)], 2, 3, 0, 1, 5)


def test_subseq_examples():
    at1 = lambda m: subseq_charpoly(3, m).poly.map_coeffs(lambda c: c.evaluate(ONE))
    assert at1(2) == t ** 3 - t ** 2 - 2 * t - 1
    assert at1(3) == t ** 3 - 4 * t ** 2 + 3 * t - 1
    assert [elem_sym(1, 3, m).evaluate(ONE) for m in range(1, 9)] == [1, 1, 4, 5, 6, 10, 15, 21]
    assert [elem_sym(2, 3, m).evaluate(ONE) for m in range(1, 9)] == [0, -2, 3, 2, -5, 1, 7, -6]


def test_subseq_annihilates_fib3_subsequences():
    for m in range(2, 7):
        q = subseq_charpoly(3, m).poly.map_coeffs(lambda c: c.evaluate(ONE))
        for r in range(m):
            seq = lambda n: fib_k(m * n + r, 3).evaluate(ONE)
            assert annihilates(q, seq, 0, 15).passed


def test_subseq_annihilates_symbolically():
    for k in (2, 3):
        for m in range(1, 5):
            q = subseq_charpoly(k, m)
            for r in range(m):
                seq = lambda n: fib_k(m * n + r, k)
                assert annihilates(q, seq, 0, 8).passed


def test_a_and_b_recurrences():
    a = lambda m: elem_sym(1, 3, m).evaluate(ONE)
    b = lambda m: elem_sym(2, 3, m).evaluate(ONE)
    for m in range(3, 31):
        assert a(m) == a(m - 1) + a(m - 3)
        assert b(m) == -b(m - 2) + b(m - 3)
