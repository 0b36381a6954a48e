import pytest

from conftest import KNIGHT_TABLE, REC2_ROWS
from walks.enumeration import count_quadrant
from walks.recurrence import (
    a_series, f_sequence, from_stepset, rec2_table, walk_counts
)
from walks.recurrence.presets import walk_translation
from walks.shared.errors import DomainError
from walks.stepset import (
    DIAGONAL, KNIGHT, KREWERAS, SQUARE, StepSet
)

GESSEL = StepSet.of([(1, 0), (-1, 0), (1, 1), (-1, -1)])


def test_rec2_table():
    table = rec2_table(7)
    for j, row in REC2_ROWS.items():
        for i, value in enumerate(row):
            assert table[(i, j)] == value, (i, j)


def test_rec2_dominates_knight_counts():
    size = 12
    table = rec2_table(size)
    for (i, j), q in KNIGHT_TABLE.items():
        if i + 2 < size and j + 2 < size:
            assert table[(i + 2, j + 2)] >= q, (i, j)


def test_f_sequence():
    assert f_sequence(7) == [0, 0, 0, 2, 2, 3, 3, 5]
    with pytest.raises(DomainError):
        f_sequence(1)


def test_a_series():
    a = a_series(3)
    assert a[(0, 0)] == 2
    assert a[(1, 0)] == a[(0, 1)] == 2
    assert a[(2, 0)] == 3
    assert a.degree == 3
    with pytest.raises(DomainError):
        a_series(-1)


def test_from_stepset_shifts():
    spec = from_stepset(KNIGHT, (1, 1))
    assert walk_translation(KNIGHT) == (2, 2)
    assert set(spec.shifts) == {(-2, 1, -1), (1, -2, -1)}
    assert spec.start == (2, 2, 1)
    assert spec.initial((3, 3, 0)) == 1
    assert spec.initial((3, 3, 1)) == 0
    with pytest.raises(DomainError):
        from_stepset(KNIGHT, (-1, 0))


@pytest.mark.parametrize("steps,start", [
    (SQUARE, (0, 0)),
    (DIAGONAL, (0, 0)),
    (KNIGHT, (1, 1)),
    (KREWERAS, (0, 0)),
    (GESSEL, (0, 0)),
])
def test_walk_counts_match_enumeration(steps, start):
    n_max, reach = 20, 10
    grid = count_quadrant(steps, start, n_max)
    counts = walk_counts(steps, start, n_max, reach)
    assert len(counts) == (reach + 1) ** 2 * (n_max + 1)
    for (i, j, n), value in counts.items():
        assert value == grid.count(i, j, n), (i, j, n)
