from fractions import Fraction

import pytest

from walks.series import (
    Branch, USeries, elementary_symmetric, from_integers, g_series_iterated,
    kernel_residual, kernel_root_series, psi_series, r_at, xi_series
)
from walks.series.identities import knight_g
from walks.shared.errors import DomainError


def test_xi_coefficients():
    xi = xi_series(17)
    assert [xi[2 + 3 * m] for m in range(6)] == [1, 1, 3, 12, 55, 273]
    assert all(xi[k] == 0 for k in range(18) if k % 3 != 2)
    with pytest.raises(DomainError):
        xi_series(1)


def test_psi_coefficients():
    psi = psi_series(9)
    assert psi[0] == 1
    assert psi[3] == Fraction(-3, 8)
    assert psi[6] == Fraction(-105, 128)
    assert psi[1] == psi[2] == psi[4] == 0


def test_xi_solves_the_kernel():
    residual = kernel_residual(xi_series(30))
    assert residual.order >= 30
    assert all(c == 0 for c in residual.coeffs)


@pytest.mark.parametrize("branch", list(Branch))
def test_every_root_solves_the_kernel(branch):
    residual = kernel_residual(kernel_root_series(branch, 30))
    assert residual.order >= 30
    assert all(c == 0 for c in residual.even.coeffs)
    assert all(c == 0 for c in residual.odd.coeffs)


def test_conjugate_root_parts():
    xi = xi_series(12)
    root = kernel_root_series(1, 12)
    assert root.even == xi * Fraction(-1, 2)
    assert root.odd == psi_series(12)
    assert kernel_root_series(Branch.XI2, 12).odd == -psi_series(12)


def test_elementary_symmetric_functions():
    e1, e2, e3 = elementary_symmetric(15)
    assert all(c == 0 for c in e1.even.coeffs + e1.odd.coeffs)
    assert e2.even.first_difference(USeries.monomial(1, 15, -1)) is None
    assert e3.even.first_difference(USeries.monomial(3, 15, -1)) is None
    assert all(c == 0 for c in e2.odd.coeffs + e3.odd.coeffs)


def test_branch_from_index():
    assert Branch.from_index(2) is Branch.XI2
    assert Branch.XI1.index == 1
    with pytest.raises(DomainError) as excinfo:
        Branch.from_index(3)
    assert excinfo.value.field == "branch"


def test_iterated_g_matches_the_walk_counts():
    assert g_series_iterated(60) == from_integers(knight_g(60), 60)
    with pytest.raises(DomainError):
        g_series_iterated(5)


def test_g_starts_with_the_axis_counts():
    g = g_series_iterated(15)
    assert [g[k] for k in (6, 9, 12, 15)] == [1, 2, 6, 24]
    assert all(g[k] == 0 for k in range(6))


def test_r_at_xi_starts_at_x_cubed():
    value = r_at(xi_series(10))
    assert value.valuation() == 3
    assert value[3] == 2


def test_iterates_of_xi_double_their_valuation():
    xi = xi_series(40)
    iterate = xi
    for i in range(1, 5):
        following = iterate.compose(xi)
        assert iterate.valuation() == 2 ** i
        assert following.valuation() >= 2 * iterate.valuation()
        iterate = following


def test_nonnegative_coefficients():
    assert all(c >= 0 for c in g_series_iterated(60).coeffs)
    assert all(c >= 0 for c in xi_series(60).coeffs)
    assert all(c >= 0 for c in (1 - psi_series(60)).coeffs)
