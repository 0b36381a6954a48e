from fractions import Fraction

import pytest

from walks.recurrence.presets import f_sequence
from walks.series.identities import (
    Identity, diagonal_sides, knight_g, knight_q, verify_identity
)
from walks.shared.errors import DomainError, TruncationError


@pytest.mark.parametrize("identity,order,branch", [
    ("main", 30, 0),
    ("main", 20, 1),
    ("main", 20, 2),
    ("knight-kernel", 14, 0),
    ("diagonal", 16, 0),
    ("main2", 24, 0),
    ("main2", 20, 1),
    ("main2", 20, 2),
    ("cavalier", 14, 0),
])
def test_identities_hold(identity, order, branch):
    report = verify_identity(identity, order, branch)
    assert report.holds, report.to_dict()
    assert report.first_failure is None


def test_report_fields():
    report = verify_identity(Identity.KNIGHT_KERNEL, 8, branch=2)
    assert report.branch is None
    assert report.to_dict() == {
        'identity': 'knight-kernel', 'order': 8, 'branch': None,
        'holds': True, 'first_failure': None,
    }
    assert verify_identity("main", 10, branch=1).branch == 1


def test_diagonal_left_side():
    lhs, rhs = diagonal_sides(16)
    assert [int(c) for c in lhs.coeffs[:11]] == [1, 0, 2, 0, 4, 0, 12, 0,
                                                 36, 0, 120]
    assert lhs.first_difference(rhs, 16) is None


def test_perturbed_g_is_caught():
    g = knight_g(30)
    g[9] += 1
    report = verify_identity("main", 30, g=g)
    assert not report.holds
    assert report.first_failure == (Fraction(9),)
    assert report.to_dict()['first_failure'] == ['9']


def test_perturbed_q_is_caught():
    q = knight_q(14)
    q[(2, 2)] += 1
    report = verify_identity("knight-kernel", 14, q=q)
    assert report.first_failure == (Fraction(3), Fraction(3))


def test_perturbed_f_is_caught():
    f = f_sequence(14)
    f[3] += 1
    report = verify_identity("cavalier", 14, f=f)
    assert not report.holds
    assert sum(report.first_failure) == 3


def test_perturbed_diagonal_inputs_are_caught():
    q = knight_q(18)
    q[(4, 4)] += 1
    report = verify_identity("diagonal", 16, q=q)
    assert not report.holds
    # Q_{n,n} sits at t^(2n-2)
    assert report.first_failure == (Fraction(6),)
    g = knight_g(21)
    g[9] += 1
    report = verify_identity("diagonal", 16, g=g)
    assert report.first_failure == (Fraction(8),)


@pytest.mark.parametrize("branch,expected", [
    (0, Fraction(5)),
    (1, Fraction(5, 2)),
    (2, Fraction(5, 2)),
])
def test_perturbed_main2_f_is_caught(branch, expected):
    f = f_sequence(41)
    f[5] += 1
    order = 24 if branch == 0 else 20
    report = verify_identity("main2", order, branch, f=f)
    assert not report.holds
    assert report.first_failure == (expected,)


def test_invalid_requests():
    with pytest.raises(DomainError):
        verify_identity("main", -1)
    with pytest.raises(ValueError):
        verify_identity("no-such-identity", 10)
    with pytest.raises(TruncationError):
        verify_identity("main", 30, g=[0, 0, 0, 0, 0])
