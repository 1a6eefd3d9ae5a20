from fractions import Fraction

import pytest

from asua.errors import BadSpec, OutOfRange
from asua.families import gen_path, gen_star
from asua.verify import (
    FAMILIES,
    VerifyReport,
    diametral_pair,
    stem_partitions,
    survey,
    survey_order,
    verify_family,
)

TREE_COUNTS = [1, 2, 3, 6, 11, 23, 47]  # n = 3..9
FLOAT_TOLERANCE = 1e-9


# --- closed-form sweeps ---

def test_path_sweep():
    report = verify_family("path", range(2, 201), float_check=True)
    assert report.ok
    assert report.instances == 199
    assert report.values_checked == sum(n - 1 for n in range(2, 201))
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


def test_cycle_sweep_with_symmetry():
    report = verify_family("cycle", range(3, 201), float_check=True)
    assert report.ok
    assert report.values_checked == 2 * sum(n - 1 for n in range(3, 201))
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


def test_stem_sweep_on_random_trees():
    report = verify_family("stem", range(1, 11), range(1, 5), samples=50, seed=7, float_check=True)
    assert report.ok
    assert report.instances == 50
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


def test_sd1_sweep():
    report = verify_family("sd1", range(3, 13), float_check=True)
    assert report.ok
    assert report.instances == sum(2 ** (n - 2) - 1 for n in range(3, 13))
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


def test_sd4_sweep():
    report = verify_family("sd4", range(3, 13), range(1, 6), float_check=True)
    assert report.ok
    assert report.instances > 0
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


@pytest.mark.parametrize("family", ["sd2", "sd3"])
def test_printed_constant_is_refuted_everywhere(family):
    report = verify_family(family, range(4, 9), printed_constant=True)
    assert report.ok
    assert report.printed_checked
    assert report.printed_refuted == report.printed_instances == report.instances
    assert report.instances == 5 * sum(n - 2 for n in range(4, 9))


def test_printed_constant_ignored_for_other_families():
    report = verify_family("sd4", range(4, 6), printed_constant=True)
    assert not report.printed_checked
    assert report.printed_instances == 0


def test_identity_sweep():
    report = verify_family("identity", range(2, 13), samples=200, seed=7)
    assert report.ok
    assert report.instances == 200


def test_contraction_sweep():
    report = verify_family("contraction", range(3, 11), samples=100, seed=7)
    assert report.ok
    assert report.instances == 100


@pytest.mark.parametrize("family", ["sd2", "sd3"])
def test_float_solver_agrees_on_single_stem_families(family):
    report = verify_family(family, range(3, 13), range(1, 6), float_check=True)
    assert report.ok
    assert report.float_max_rel_error <= FLOAT_TOLERANCE


def test_sd1_sweep_counts_local_rules():
    """Each instance checks every transient vertex plus one local rule per leaf."""
    report = verify_family("sd1", range(3, 6))
    assert report.values_checked == 4 + 17 + 52


def test_broken_degree3_rule_is_caught(monkeypatch):
    monkeypatch.setattr("asua.verify.sweeps.local_rule_degree3", lambda tx, ty: Fraction(0))
    report = verify_family("sd1", range(3, 5))
    # one leaf on T(3,{2}); 1 + 1 + 2 leaves over the three T(4, K)
    assert report.mismatch_count == 5
    first = report.mismatches[0]
    assert (first.instance, first.vertex) == ("T(3,{2}) local@v2", 2)


def test_broken_stem_branch_rule_is_caught(monkeypatch):
    monkeypatch.setattr(
        "asua.verify.sweeps.local_rule_stem_branch", lambda tx, ty, d: Fraction(-1)
    )
    report = verify_family("sd4", range(3, 7), range(1, 4))
    assert report.mismatch_count == report.instances


def test_leaf_sweep():
    report = verify_family("leaf", range(2, 13), samples=200, seed=7)
    assert report.ok
    assert report.instances == 200
    # every tree sample has at least one non-absorbing leaf
    assert report.values_checked >= 100


def test_monotone_sweep():
    report = verify_family("monotone", range(2, 13), samples=100, seed=7)
    assert report.ok
    assert report.instances == 100
    assert report.values_checked > 0


def test_record_at_least_only_flags_decreases():
    report = VerifyReport(family="monotone")
    report.record_at_least("g", 0, Fraction(3), Fraction(3))
    report.record_at_least("g", 1, Fraction(3), Fraction(7, 2))
    assert report.ok
    report.record_at_least("g", 2, Fraction(3), Fraction(5, 2))
    assert report.mismatch_count == 1
    assert report.values_checked == 3
    assert report.mismatches[0].vertex == 3


def test_all_families_are_sweepable():
    assert {"leaf", "monotone"} <= set(FAMILIES)


def test_mismatches_are_reported(monkeypatch):
    monkeypatch.setattr("asua.verify.sweeps.path_asua", lambda n, i: 0)
    report = verify_family("path", range(2, 20))
    assert not report.ok
    assert report.mismatch_count == report.values_checked
    assert len(report.mismatches) == 10
    first = report.mismatches[0]
    assert (first.instance, first.vertex, first.expected, first.actual) == ("PATH_2", 1, 0, 1)


def test_orders_below_family_minimum_are_skipped():
    report = verify_family("cycle", range(1, 4))
    assert report.instances == 1


def test_unknown_family():
    with pytest.raises(BadSpec):
        verify_family("hypercube")


def test_stem_partitions():
    assert list(stem_partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    five = list(stem_partitions(5))
    assert (2, 2, 1) in five
    assert (3, 1, 1) in five
    assert (2, 1, 1, 1) not in five
    assert all(len(p) <= 3 and sum(p) == 5 for p in five)


# --- survey ---

def test_survey_counts():
    reports = survey(range(3, 10))
    assert [r.tree_count for r in reports] == TREE_COUNTS
    assert all(len(r.trees) == r.tree_count for r in reports)


def test_survey_order_four():
    """Star absorbing at its center gives 3; path absorbing at an end gives 22."""
    report = survey_order(4)
    each = report.t_sigma["each"]
    assert (each.low, each.high) == (3, 22)
    assert each.star_attains_low
    assert each.path_attains_high
    for convention in ("max", "min"):
        assert report.t_sigma[convention].star_attains_low
        assert report.t_sigma[convention].path_attains_high
    assert report.t_sigma["max"].low == 17
    assert report.t_sigma["min"].high == 8


def test_survey_single_tree_is_both_extremes():
    report = survey_order(3)
    assert report.tree_count == 1
    row = report.trees[0]
    assert row.is_star and row.is_path
    assert report.t_sigma["each"].low_trees == [0]
    assert report.round_trip["diameter"].path_attains_high


def test_survey_round_trips():
    report = survey_order(4)
    path_row = next(row for row in report.trees if row.is_path)
    star_row = next(row for row in report.trees if row.is_star)
    assert path_row.round_trip == {"max": 18, "diameter": 18}
    assert star_row.round_trip == {"max": 12, "diameter": 12}


def test_survey_selected_conventions():
    report = survey_order(5, ["max"])
    assert set(report.t_sigma) == {"max"}
    assert set(report.round_trip) == {"max", "diameter"}


def test_survey_order_limit():
    with pytest.raises(OutOfRange):
        survey_order(11)


def test_diametral_pair():
    assert diametral_pair(gen_path(5)) == (0, 4)
    assert diametral_pair(gen_star(5)) == (1, 2)
