"""Parameter presets, condition checkers, and the reference bound table."""

from fractions import Fraction as F

import pytest

from critgraphs import (
    BoundParams,
    PreconditionError,
    check_lemma31,
    check_lemma32,
    check_thm41,
    check_thm43,
    dirac_bound,
    g_family,
    ky_asymptotic,
    ky_bound,
    main_bound,
    preset_params,
    table1,
    tree_bound_rhs,
)
from critgraphs.discharge import gallai_target


def small_p(k):
    return preset_params(k, "smallP")


def test_preset_values():
    bp = preset_params(7, "gallai")
    assert (bp.p, bp.f, bp.h) == (F(4, 3), F(-2), F(0))
    bp = small_p(5)
    assert (bp.p, bp.f, bp.h) == (F(1), F(-4), F(1))
    bp = small_p(7)
    assert (bp.p, bp.f, bp.h) == (F(16, 26), F(-108, 26), F(28, 26))
    ks = preset_params(7, "ks")
    assert (ks.p, ks.f, ks.h) == (F(24, 32), F(-120, 32), F(28, 32))


def test_preset_rejects():
    with pytest.raises(PreconditionError):
        preset_params(3, "gallai")
    with pytest.raises(PreconditionError):
        preset_params(7, "nope")


def test_lemma31_accepts_the_loose_pair():
    for k in range(5, 31):
        bp = BoundParams(k, F(3, k - 2), F(-3), F(0))
        report = check_lemma31(bp)
        assert report.passed, report.failed


def test_lemma31_rejects_positive_or_deep_f():
    assert not check_lemma31(BoundParams(5, F(1), F(1), F(0))).passed
    assert not check_lemma31(BoundParams(5, F(1), F(-10), F(0))).passed


def test_condition_reports_name_failures():
    bp = BoundParams(7, F(0), F(-99), F(0))
    report = check_lemma32(bp)
    assert not report.passed
    assert report.failed
    names = [name for name, _ in report.conditions]
    assert all(name in names for name in report.failed)
    held = {name for name, ok in report.conditions if ok}
    assert not (held & set(report.failed))


def test_presets_pass_their_checkers():
    for k in (5, 6):
        assert check_thm43(small_p(k)).passed
    for k in range(7, 31):
        assert check_thm41(small_p(k)).passed
        assert check_thm41(preset_params(k, "ks")).passed
        assert check_thm41(preset_params(k, "gallai")).passed


def test_thm41_needs_k_at_least_seven():
    report = check_thm41(small_p(5))
    assert not report.k_ok
    assert not report.passed
    with pytest.raises(PreconditionError):
        main_bound(5, "thm41", small_p(5))


def test_thm43_is_for_five_and_six():
    assert check_thm43(small_p(5)).k_ok
    assert not check_thm43(small_p(7)).k_ok


def test_main_bound_closed_forms():
    for k in (5, 6):
        got = main_bound(k, "auto", small_p(k))
        want = (k - 1) + F((k - 3) * (2 * k - 5), k**3 + 2 * k**2 - 18 * k + 15)
        assert got == want
    for k in range(7, 101):
        got = main_bound(k, "auto", small_p(k))
        want = (k - 1) + F((k - 3) * (2 * k - 5), k**3 + k**2 - 15 * k + 15)
        assert got == want


def test_main_bound_beats_the_baseline():
    for k in range(5, 31):
        assert main_bound(k, "auto", small_p(k)) > gallai_target(k)


def test_gallai_preset_reproduces_its_target():
    for k in range(7, 31):
        assert main_bound(k, "thm41", preset_params(k, "gallai")) == gallai_target(k)


def test_specific_bound_values():
    assert main_bound(7, "auto", small_p(7)) == F(924, 151)
    assert main_bound(5, "auto", small_p(5)) == F(41, 10)
    assert gallai_target(7) == F(140, 23)


def test_tree_bound_rhs_arithmetic():
    bp = small_p(5)
    assert tree_bound_rhs(bp, 20, 2) == F(58)
    assert tree_bound_rhs(bp, 1, 0) == F(-1)
    bp31 = BoundParams(5, F(1), F(-3), F(0))
    assert tree_bound_rhs(bp31, 7, 99) == F(3 * 7 - 3)


def test_dirac_and_ky_formulas():
    assert dirac_bound(4, 6) == 3 * 6 + 1  # on twice the edge count
    assert ky_bound(4, 6) == 10
    assert ky_bound(4, 4) == 6  # met with equality by the complete graph
    for k in (4, 5, 6):
        for n in range(k, 30):
            assert ky_bound(k, n + 1) >= ky_bound(k, n)
    # long-run slope approaches the asymptotic average degree
    k = 6
    slope = F(ky_bound(k, 1001) - ky_bound(k, 1), 1000)
    assert abs(2 * slope - ky_asymptotic(k)) < F(1, 100)


def test_g_family_values():
    assert g_family(5, 1) == F(4) + F(2, 18)
    assert g_family(7, F(1, 2)) == F(6) + F(4, 43)
    with pytest.raises(PreconditionError):
        g_family(5, 99)


EXPECTED_GRID = {
    4: ("3.0769", "3.1429", None, "3.3333", None, None, None),
    5: ("4.0909", "4.1429", None, "4.5000", None, "4.0984", "4.1000"),
    6: ("5.0909", "5.1304", "5.0976", "5.6000", None, "5.1053", "5.1076"),
    7: ("6.0870", "6.1176", "6.0990", "6.6667", None, "6.1149", "6.1192"),
    8: ("7.0820", "7.1064", "7.0980", "7.7143", None, "7.1128", "7.1167"),
    9: ("8.0769", "8.0968", "8.0959", "8.7500", "8.0838", "8.1094", "8.1130"),
    10: ("9.0722", "9.0886", "9.0932", "9.7778", "9.0793", "9.1055", "9.1088"),
    15: ("14.0541", "14.0618", "14.0785", "14.8571", "14.0610", "14.0864", "14.0884"),
    20: ("19.0428", "19.0474", "19.0666", "19.8947", "19.0490", "19.0719", "19.0733"),
}

COLUMNS = ("gallai", "kriv", "ks_critical", "ky", "ks_list", "kr", "here")


def test_table_matches_published_digits():
    grid = table1(sorted(EXPECTED_GRID))
    for k, want in EXPECTED_GRID.items():
        got = tuple(grid[k][c].display for c in COLUMNS)
        assert got == want, k


def test_table_exact_cells():
    grid = table1([5, 7])
    assert grid[7]["gallai"].exact == F(140, 23)
    assert grid[7]["here"].exact == F(924, 151)
    assert grid[5]["here"].exact == F(41, 10)
    assert grid[5]["ks_critical"].exact is None


def test_table_rejects_small_k():
    with pytest.raises(PreconditionError):
        table1([3])
