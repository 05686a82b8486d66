"""Grid enumeration, exhaustive verification, and deterministic parallelism."""

from fractions import Fraction
from math import gcd

import pytest

from distribq.identity import ALL_CASES, Triple, case_from_label
from distribq.oracle import (
    SearchBounds,
    enumerate_rationals,
    search_solutions,
    verify_characterization,
)
from distribq.rational import DomainError

T = Triple.of


def test_enumerate_smallest_grids():
    assert enumerate_rationals(SearchBounds(1, 1)) == [-1, 0, 1]
    assert enumerate_rationals(SearchBounds(1, 2)) == [
        Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)
    ]
    assert len(enumerate_rationals(SearchBounds(2, 2))) == 7


def test_enumerate_is_sorted_canonical_and_duplicate_free():
    values = enumerate_rationals(SearchBounds(6, 4))
    assert values == sorted(values)
    assert len(values) == len(set(values))
    for q in values:
        assert 1 <= q.denominator <= 4
        assert abs(q.numerator) <= 6
        assert gcd(abs(q.numerator), q.denominator) == 1


def test_enumerate_rejects_bad_bounds():
    with pytest.raises(DomainError):
        enumerate_rationals(SearchBounds(0, 1))


def test_base_law_search_covers_the_whole_grid():
    solutions = search_solutions(case_from_label("L1"), SearchBounds(1, 1))
    assert len(solutions) == 27


def test_search_respects_grid_order():
    values = enumerate_rationals(SearchBounds(2, 1))
    solutions = search_solutions(case_from_label(1), SearchBounds(2, 1))
    expected = [Triple(Fraction(0), r2, r3) for r2 in values for r3 in values]
    assert solutions == expected


def test_search_case14_contains_hand_checked_triple():
    solutions = search_solutions(case_from_label(14), SearchBounds(2, 1))
    assert T(2, 1, 1) in solutions


def test_search_division_over_addition_solutions():
    solutions = search_solutions(case_from_label(9), SearchBounds(2, 1))
    for t in solutions:
        assert t.r1 == 0 and t.r2 * t.r3 != 0 and t.r2 + t.r3 != 0
    assert T(0, 1, 1) in solutions
    assert T(0, 1, -1) not in solutions


def test_characterizations_are_exact_for_every_case():
    bounds = SearchBounds(3, 2)
    for case in ALL_CASES:
        report = verify_characterization(case, bounds)
        assert report.exact, case.label
        assert report.missing == () and report.spurious == ()
        assert report.total_triples == len(enumerate_rationals(bounds)) ** 3


def test_coverage_gap_examples():
    gap12 = verify_characterization(case_from_label(12), SearchBounds(6, 1))
    assert T(2, 5, 1) in gap12.coverage_gap
    gap14 = verify_characterization(case_from_label(14), SearchBounds(6, 1))
    assert T(2, 5, 1) in gap14.coverage_gap
    gap13 = verify_characterization(case_from_label(13), SearchBounds(6, 2))
    assert gap13.coverage_gap_count > 0


def test_easy_cases_have_no_coverage_gap():
    bounds = SearchBounds(4, 2)
    for label in list(range(1, 12)) + ["L1", "L2"]:
        report = verify_characterization(case_from_label(label), bounds)
        assert report.coverage_gap_count == 0, label


def test_list_limit_truncates_lists_but_not_counts():
    report = verify_characterization(
        case_from_label(12), SearchBounds(6, 1), list_limit=5
    )
    assert len(report.coverage_gap) == 5
    assert report.coverage_gap_count > 5
    unlimited = verify_characterization(
        case_from_label(12), SearchBounds(6, 1), list_limit=None
    )
    assert len(unlimited.coverage_gap) == unlimited.coverage_gap_count


def test_parallel_runs_match_single_threaded_exactly():
    case = case_from_label(12)
    bounds = SearchBounds(4, 2)
    assert search_solutions(case, bounds, jobs=1) == search_solutions(
        case, bounds, jobs=4
    )
    assert verify_characterization(case, bounds, jobs=1) == verify_characterization(
        case, bounds, jobs=4
    )
