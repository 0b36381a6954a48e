from fractions import Fraction

from walks.recurrence.simplex import LPStatus, solve


def test_optimal_vertex():
    result = solve([[1, 1]], [2], [1, 2])
    assert result.status is LPStatus.OPTIMAL
    assert result.x == [2, 0]
    assert result.objective == 2


def test_rational_solution():
    result = solve([[2, 1], [1, 3]], [3, 4], [1, 1])
    assert result.status is LPStatus.OPTIMAL
    assert result.x == [1, 1]
    assert isinstance(result.x[0], Fraction)


def test_infeasible():
    result = solve([[1, 1]], [-1], [1, 1])
    assert result.status is LPStatus.INFEASIBLE
    assert result.x is None


def test_unbounded():
    result = solve([[1, -1]], [0], [-1, 0])
    assert result.status is LPStatus.UNBOUNDED


def test_feasibility_only():
    result = solve([[1, 2]], [Fraction(1, 2)])
    assert result.status is LPStatus.OPTIMAL
    assert result.objective == 0
    assert result.x[0] + 2 * result.x[1] == Fraction(1, 2)


def test_redundant_rows_are_dropped():
    result = solve([[1, 1], [2, 2]], [2, 4], [1, 3])
    assert result.status is LPStatus.OPTIMAL
    assert result.x == [2, 0]
    assert result.objective == 2
