from fractions import Fraction

import pytest

from estar.errors import DomainError, ResourceLimitError
from estar.graph import build_graph, circulant, maximal_star_masks
from estar.rowsystem import (
    combine,
    decide_rows,
    forced_scan,
    perturbation_family,
    positive_row_solution,
    solves_rows,
    total,
)


def brute_force_holds(rows, ncols, weights):
    return all((total(weights, m) == 1) == (m in rows) for m in range(1, 1 << ncols))


def test_positive_row_solution():
    rows = [0b00111, 0b01010, 0b10100]
    x = positive_row_solution(rows, 5)
    assert x is not None and all(v > 0 for v in x) and solves_rows(x, rows)
    # the second row forces column 1 to zero
    assert positive_row_solution([0b011, 0b001], 2) is None


def test_decide_rows_matches_brute_force_on_small_systems():
    cases = [
        ([0b0011, 0b0110, 0b1100, 0b1001], 4),  # C4 stars: holds
        ([0b011, 0b110], 3),
        ([0b0011, 0b0110, 0b1100], 4),  # {0, 3} is forced to 1
        ([0b0111, 0b1000], 4),
    ]
    for rows, ncols in cases:
        decision = decide_rows(rows, ncols)
        if decision.holds:
            assert brute_force_holds(set(rows), ncols, decision.weights)
        else:
            assert (rows, decision.forced) == ([0b0011, 0b0110, 0b1100], 0b1001)
            assert decision.forced not in rows
            assert total(decision.positive, decision.forced) == 1


def test_forced_scan_lists_row_combinations():
    rows = maximal_star_masks(circulant(5, (1,)))
    scan = forced_scan(rows, 5)
    assert len(scan.kernel) == 0  # odd cycle: the star system has full rank
    assert len(scan.masks) == 31


def test_combine_checks_its_inputs():
    rows = [0b0011, 0b0110, 0b1100, 0b1001]
    half = [Fraction(1, 2)] * 4
    with pytest.raises(DomainError):
        combine(rows, 4, {}, [Fraction(1, 3)] * 4)
    result = combine(rows, 4, perturbation_family(rows, half, forced_scan(rows, 4).kernel), half)
    assert brute_force_holds(set(rows), 4, result.weights)
    assert [s.level_before for s in result.steps] == [2]


def test_perturbation_family_rejects_forced_masks():
    rows = [0b0011, 0b0110, 0b1100]
    base = [Fraction(1, 2)] * 4
    member = perturbation_family(rows, base, forced_scan(rows, 4).kernel)
    with pytest.raises(DomainError):
        member(0b1001)
    moved = member(0b0101)
    assert solves_rows(moved, rows) and total(moved, 0b001) != 1


def test_cap():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(ResourceLimitError):
        decide_rows(maximal_star_masks(g), 30, max_bits=20)
