import math

import pytest

from conftest import KNIGHT_TABLE, in_table_region
from walks.bijection import iter_walks
from walks.enumeration import (
    Region, axis_hitting_counts, axis_sequence, count_half_plane,
    count_quadrant, diagonal_sequence, half_line_weighted_counts,
    knight_bound, length_sequence, translated_counts
)
from walks.shared.errors import DomainError
from walks.stepset import DIAGONAL, KNIGHT, KREWERAS, SQUARE, StepSet


@pytest.fixture(scope="module")
def knight_grid():
    return count_quadrant(KNIGHT, (1, 1), 22)


def test_knight_table(knight_grid):
    totals = knight_grid.aggregate()
    for i in range(13):
        for j in range(13):
            if in_table_region(i, j):
                assert totals.get((i, j), 0) == KNIGHT_TABLE.get((i, j), 0), \
                    (i, j)
    assert knight_grid.aggregated(8, 8) == 1440


def test_knight_bound_dominates(knight_grid):
    for (i, j), c in knight_grid.aggregate().items():
        assert c <= knight_bound(i, j)
    for i in range(1, 8):
        assert knight_bound(3 * i, 0) == math.comb(3 * i - 2, i - 1)
    assert knight_bound(2, 0) == 0


def test_axis_sequence(knight_grid):
    g = axis_sequence(knight_grid, order=15)
    assert len(g) == 16
    assert {m: c for m, c in enumerate(g) if c} == {6: 1, 9: 2, 12: 6,
                                                    15: 24}


def test_axis_sequence_without_bottom_row():
    grid = count_quadrant(StepSet.of([(0, 1)]), (0, 1), 5)
    assert axis_sequence(grid) == [0, 0, 0, 0]


def test_diagonal_sequence(knight_grid):
    assert diagonal_sequence(knight_grid, 8) == [0, 1, 2, 4, 12, 36, 120,
                                                 408, 1440]


def test_knight_lengths():
    grid = count_quadrant(KNIGHT, (1, 1), 3)
    assert length_sequence(grid) == [1, 2, 2, 4]


def test_knight_support(knight_grid):
    for i, j, n, c in knight_grid.cells():
        assert c > 0
        assert (i - j) % 3 == 0
        assert n == i + j - 2


@pytest.mark.parametrize("steps, start", [
    (SQUARE, (0, 0)), (KNIGHT, (1, 1)), (KREWERAS, (2, 1)), (DIAGONAL, (1, 0)),
])
def test_quadrant_counts_below_half_plane_counts(steps, start):
    quadrant = count_quadrant(steps, start, 10)
    half = count_half_plane(steps, start, 10)
    for i, j, n, c in quadrant.cells():
        assert c <= half.count(i, j, n)


@pytest.mark.parametrize("steps, start", [
    (SQUARE, (0, 0)), (KNIGHT, (1, 1)), (KREWERAS, (0, 0)),
])
def test_larger_n_max_keeps_earlier_layers(steps, start):
    short = count_quadrant(steps, start, 8)
    longer = count_quadrant(steps, start, 14)
    assert longer.layers[:9] == short.layers


@pytest.mark.parametrize("n", range(15))
def test_square_and_diagonal_closed_forms(n):
    square = length_sequence(count_quadrant(SQUARE, (0, 0), n))[n]
    diagonal = length_sequence(count_quadrant(DIAGONAL, (0, 0), n))[n]
    assert square == math.comb(n, n // 2) * math.comb(n + 1, (n + 1) // 2)
    assert diagonal == math.comb(n, n // 2) ** 2


def test_square_return_counts_match_enumeration():
    grid = count_quadrant(SQUARE, (0, 0), 6)
    for n in range(7):
        brute = sum(1 for w in iter_walks(SQUARE, (0, 0), n, Region.QUADRANT)
                    if w.end == (0, 0))
        assert grid.count(0, 0, n) == brute


def test_half_plane_counts():
    grid = count_half_plane(SQUARE, (0, 0), 2)
    assert length_sequence(grid)[1] == 3
    on_axis = sum(c for (i, j), c in grid.layers[2].items() if j == 0)
    brute = sum(1 for w in iter_walks(SQUARE, (0, 0), 2,
                                      Region.RIGHT_HALF_PLANE)
                if w.end[1] == 0)
    assert on_axis == brute == 4


@pytest.mark.parametrize("steps, start", [
    (SQUARE, (0, 0)), (KNIGHT, (1, 1)), (KREWERAS, (2, 1)),
])
def test_half_line_projection(steps, start):
    grid = count_half_plane(steps, start, 8)
    weighted = half_line_weighted_counts(steps, start, 8)
    for n in range(9):
        per_i = {}
        for (i, j), c in grid.layers[n].items():
            per_i[i] = per_i.get(i, 0) + c
            assert weighted[(i, n)].coefficient(j) == c
        for i, total in per_i.items():
            assert weighted[(i, n)].total() == total


def test_hitting_counts_partition_all_walks():
    n_max = 9
    hits = axis_hitting_counts(DIAGONAL, (1, 3), n_max)
    lengths = length_sequence(count_quadrant(DIAGONAL, (1, 3), n_max))
    for n in range(n_max + 1):
        assert hits.hitting(n) + hits.never[n] == lengths[n]
    assert hits.never[0] == 1 and hits.hitting(0) == 0


@pytest.mark.parametrize("steps, start", [
    (SQUARE, (0, 3)), (DIAGONAL, (2, 2)), (KREWERAS, (1, 4)), (KNIGHT, (1, 4)),
])
def test_translation_counts_never_hitting_walks(steps, start):
    hits = axis_hitting_counts(steps, start, 10)
    assert translated_counts(steps, start, 10) == hits.never


def test_frames():
    grid = count_quadrant(KNIGHT, (1, 1), 2)
    long = grid.to_frame()
    assert list(long.columns) == ['i', 'j', 'n', 'count']
    assert len(long) == 4
    agg = grid.to_frame(aggregate=True)
    assert list(agg.columns) == ['i', 'j', 'count']
    assert agg.set_index(['i', 'j']).loc[(2, 2), 'count'] == '2'
    table = grid.to_table()
    assert table.loc[2, 2] == '2'
    assert table.loc[0, 3] == '1'
    assert table.loc[1, 0] == ''


def test_invalid_arguments():
    with pytest.raises(DomainError):
        count_quadrant(SQUARE, (0, -1), 3)
    with pytest.raises(DomainError):
        count_half_plane(SQUARE, (-1, 5), 3)
    with pytest.raises(DomainError):
        count_quadrant(SQUARE, (0, 0), -1)
