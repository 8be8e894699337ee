"""Tests for fat point schemes, jet separation, and asymptotic reports."""

from fractions import Fraction

import pytest

from symdual.errors import DuplicatePoints, InvalidInput
from symdual.numseq import NEG_INF
from symdual.points import (
    PointConfig,
    alpha_seq_points,
    asymptotic_report,
    expected_dual_growth,
    expected_waldschmidt,
    fat_scheme_report,
    jet_sep_direct,
    jet_sep_index,
    nagata_check,
    reg_seq,
)


def _triangle():
    return PointConfig(2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_point_config_validation():
    pytest.raises(DuplicatePoints, lambda: PointConfig(1, [(1, 0), (2, 0)]))
    pytest.raises(InvalidInput, lambda: PointConfig(1, []))
    pytest.raises(InvalidInput, lambda: PointConfig(2, [(1, 0)]))


def test_point_config_random_and_json():
    X = PointConfig.random(4, 2, seed=11)
    assert X.N == 2 and len(X.points) == 4
    Y = PointConfig.from_json(X.to_json())
    assert Y.points == X.points
    # same seed reproduces the same configuration
    assert PointConfig.random(4, 2, seed=11).points == X.points


def test_fat_scheme_report_triangle():
    T = _triangle()
    r1 = fat_scheme_report(T, 1, d_cap=8)
    assert r1.hilbert.values == (1, 3)
    assert r1.multiplicity_e == 3
    assert r1.reg == 1 and r1.alpha == 2
    r2 = fat_scheme_report(T, 2, d_cap=8)
    assert r2.hilbert.values == (1, 3, 6, 9)
    assert r2.multiplicity_e == 9
    assert r2.reg == 3 and r2.alpha == 3
    r3 = fat_scheme_report(T, 3, d_cap=8)
    assert r3.hilbert.values == (1, 3, 6, 10, 15, 18)
    assert r3.reg == 5 and r3.alpha == 5


def test_single_point_report():
    X = PointConfig(2, [(1, 2, 3)])
    r = fat_scheme_report(X, 1, d_cap=6)
    assert r.reg == 0 and r.alpha == 1 and r.multiplicity_e == 1
    r2 = fat_scheme_report(X, 2, d_cap=6)
    assert r2.reg == 1 and r2.alpha == 2 and r2.multiplicity_e == 3


def test_reg_and_alpha_windows():
    T = _triangle()
    assert reg_seq(T, 4, d_cap=10).values == (2, 4, 6, 8)
    assert alpha_seq_points(T, 6, d_cap=10).values == (2, 3, 5, 6, 8, 9)


def test_jet_separation_triangle():
    T = _triangle()
    assert jet_sep_direct(T, 0, 1)
    assert not jet_sep_direct(T, 1, 2)
    assert jet_sep_direct(T, 1, 3)
    assert [jet_sep_index(T, d) for d in range(6)] == [NEG_INF, 0, 0, 1, 1, 2]


def test_jet_separation_single_point():
    X = PointConfig(2, [(1, 0, 0)])
    # one point: degree-d forms separate d-jets and no more
    assert [jet_sep_index(X, d) for d in range(4)] == [0, 1, 2, 3]


def test_asymptotic_report_triangle():
    rep = asymptotic_report(_triangle(), d_cap=8, m_cap=4)
    assert rep.reg_window.values == (2, 4, 6, 8)
    assert rep.jet_window.values == (NEG_INF, 1, 1, 2, 2, 3, 3, 4)
    assert rep.transform_match and rep.reverse_match
    assert len(rep.mismatches) == 0
    assert rep.reg_subadditive and rep.jet_superadditive
    assert rep.jet_window_start == 4
    assert rep.seshadri_lower == Fraction(3, 8)
    assert rep.reg_upper == Fraction(2)
    assert rep.product_le_one
    doc = rep.to_json()
    assert doc["seshadri_lower"] == "3/8"
    assert doc["jet_window"]["values"][0] == "-inf"


def test_nagata_check_smoke():
    out = nagata_check(5, 3, trials=1, m_cap=3, d_cap=8, seed=5)
    assert out["r"] == 5 and out["N"] == 3 and out["trials"] == 1
    assert out["expected_waldschmidt"] == "5/3"
    assert out["expected_dual_growth"] == "5/2"
    trial = out["trials_detail"][0]
    assert trial["alpha"] == [2, 4, 5]
    assert trial["min_alpha_ratio"] == "5/3"
    assert trial["reg"] == [3, 4, 6]
    # same seed reproduces the verdicts exactly
    again = nagata_check(5, 3, trials=1, m_cap=3, d_cap=8, seed=5)
    assert again == out


def test_expected_waldschmidt():
    assert expected_waldschmidt(2, 1) == Fraction(2)
    assert expected_waldschmidt(3, 2) == Fraction(3, 2)
    assert expected_waldschmidt(4, 2) == Fraction(2)
    assert expected_waldschmidt(5, 2) == Fraction(15, 7)
    assert expected_waldschmidt(5, 3) == Fraction(5, 3)
    assert expected_waldschmidt(6, 3) == Fraction(5, 3)
    assert expected_waldschmidt(10, 2) is None
    assert expected_waldschmidt(1, 5) == Fraction(1)


def test_expected_dual_growth():
    assert expected_dual_growth(3, 2) == Fraction(3)
    assert expected_dual_growth(4, 2) == Fraction(2)
    assert expected_dual_growth(5, 2) == Fraction(15, 8)
    assert expected_dual_growth(10, 2) is None
