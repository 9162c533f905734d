import logging
from fractions import Fraction

import pytest

from fibsums.conjlab import FORMULAS, ConjEntry, ConjReport, check_conjectures, extract_a, reassemble
from fibsums.symfun import p_sym


def test_extract_examples():
    assert extract_a(0, 0) == -6
    assert extract_a(2, 1) == 2
    assert extract_a(6, 3) == 2
    assert extract_a(6, 2) == -3
    assert extract_a(5, 2) == -5


def test_extract_outside_window_is_zero(caplog):
    with caplog.at_level(logging.INFO, logger="fibsums.conjlab"):
        assert extract_a(6, 7) == 0
    assert "outside" in caplog.text
    with pytest.raises(ValueError):
        extract_a(-1, 0)


def test_extracted_coefficients_reassemble():
    for m_arg in range(0, 30):
        assert reassemble(m_arg) == p_sym(2, m_arg, 4)
        for (xe, se), _ in p_sym(2, m_arg, 4).items():
            # x-exponents are 4j for even m_arg and 4j + 2 for odd m_arg
            assert xe % 4 == (0 if m_arg % 2 == 0 else 2)


def test_all_formulas_present():
    assert len(FORMULAS) == 14
    assert len({f.name for f in FORMULAS}) == 14


def test_simple_formulas_match():
    reports = {r.formula: r for r in check_conjectures(12)}
    assert all(e.match for e in reports["a(4m,4,2m)"].entries if e.m >= 1)
    assert all(e.match for e in reports["a(4m+2,4,2m+1)"].entries)
    e1 = reports["a(4m+1,4,2m)"].entries[1]
    assert e1.m == 1 and e1.predicted == -5 and e1.actual == -5


def test_report_structure_and_poles():
    reports = check_conjectures(12)
    assert len(reports) == 14
    for r in reports:
        assert [e.m for e in r.entries] == list(range(13))
        for e in r.entries:
            assert e.pole == (e.predicted is None)
            if not e.pole:
                assert e.match == (e.predicted == e.actual)
        d = r.to_dict()
        assert set(d) == {"formula", "matching_from", "contiguous", "entries"}
    pole_entry = {r.formula: r for r in reports}["a(4m,4,2m-1)"].entries[2]
    assert pole_entry.pole and pole_entry.predicted is None


def test_pole_evaluation_raises():
    f = next(f for f in FORMULAS if f.name == "a(4m,4,2m-1)")
    with pytest.raises(ZeroDivisionError):
        f.evaluate(2)
    assert f.evaluate(3) == 48


def test_contiguity_logic():
    good = ConjReport("g", [ConjEntry(0, Fraction(1), 0, False, False),
                            ConjEntry(1, None, 5, False, True),
                            ConjEntry(2, Fraction(3), 3, True, False)])
    assert good.matching_from() == 2 and good.contiguous()
    bad = ConjReport("b", [ConjEntry(0, Fraction(0), 0, True, False),
                           ConjEntry(1, Fraction(1), 2, False, False)])
    assert bad.matching_from() is None and not bad.contiguous()


def test_sign_flipped_formula_is_flagged(caplog):
    with caplog.at_level(logging.WARNING, logger="fibsums.conjlab"):
        reports = {r.formula: r for r in check_conjectures(12)}
    r = reports["a(4m+2,4,2m-2)"]
    assert not r.contiguous()
    late = [e for e in r.entries if e.m >= 8]
    assert all(e.actual == -e.predicted != 0 for e in late)
    assert "a(4m+2,4,2m-2)" in caplog.text
