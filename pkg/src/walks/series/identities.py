# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
Coefficient-by-coefficient checks of the knight-walk functional equations.

Each side of an identity is built from an independent source: walk counts
come from the counting DP, F and A from the recurrence engine, and the
kernel roots from their closed coefficient formulas. Callers may inject
their own G, Q, F or A coefficients to check that a wrong input is caught.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from ..enumeration import axis_sequence, count_quadrant
from ..recurrence.presets import a_series, f_sequence
from ..shared.errors import DomainError, TruncationError
from ..stepset import KNIGHT
from .biv_series import BivSeries, r_series
from .kernel import Branch, kernel_root_series, r_at, xi_series
from .sqrt_series import SqrtSeries, compose_into
from .useries import USeries, from_integers

logger = logging.getLogger(__name__)

Term = Tuple[Fraction, ...]


class Identity(str, Enum):
    MAIN = "main"
    KNIGHT_KERNEL = "knight-kernel"
    DIAGONAL = "diagonal"
    MAIN2 = "main2"
    CAVALIER = "cavalier"


@dataclass(frozen=True)
class IdentityReport:
    """
    ``first_failure`` holds the exponents of the lowest mismatching term:
    (k,) for a series in x (k may be a half-integer) or (i, j) for a
    bivariate series.
    """
    identity: Identity
    order: int
    branch: Optional[int]
    holds: bool
    first_failure: Optional[Term] = None

    def to_dict(self) -> dict:
        return {
            'identity': self.identity.value,
            'order': self.order,
            'branch': self.branch,
            'holds': self.holds,
            'first_failure': (None if self.first_failure is None
                              else [str(e) for e in self.first_failure]),
        }


def knight_g(order: int) -> list:
    """Coefficients g_0..g_order of G(x), counted by the DP engine."""
    grid = count_quadrant(KNIGHT, (1, 1), max(order - 5, 0))
    return axis_sequence(grid, order=order)


def knight_q(degree: int) -> Dict[Tuple[int, int], int]:
    """Aggregated knight counts Q_{i,j} for i + j <= degree."""
    grid = count_quadrant(KNIGHT, (1, 1), max(degree - 2, 0))
    return {k: v for k, v in grid.aggregate().items() if sum(k) <= degree}


def _g(order: int, g: Optional[Sequence[int]]) -> USeries:
    return from_integers(knight_g(order) if g is None else g, order)


def _f(order: int, f: Optional[Sequence[int]]) -> USeries:
    return from_integers(f_sequence(order) if f is None else f, order)


def _ring_check(lhs, rhs, order: int) -> Optional[Term]:
    if min(lhs.order, rhs.order) < order:
        raise TruncationError(
            f"Identity sides are only known through order "
            f"{min(lhs.order, rhs.order)}, {order} was requested"
        )
    k = lhs.first_difference(rhs, order)
    return None if k is None else (Fraction(k),)


def _root(branch: int, order: int) -> Union[USeries, SqrtSeries]:
    if branch == 0:
        return xi_series(order)
    return kernel_root_series(Branch.from_index(branch), order)


def _compose(f: USeries, y: Union[USeries, SqrtSeries]):
    if isinstance(y, SqrtSeries):
        return compose_into(f, y)
    return f.compose(y)


def _boundary_order(branch: int, order: int) -> int:
    # val(xi0) = 2, val(xi1) = val(xi2) = 1/2
    return order if branch == 0 else 2 * order + 1


def check_main(order: int, branch: int = 0,
               g: Optional[Sequence[int]] = None) -> Optional[Term]:
    """G(x) + G(xi_b(x)) = x^2 xi_b(x)^2."""
    G = _g(_boundary_order(branch, order), g)
    y = _root(branch, order)
    x = USeries.x(order)
    lhs = G.truncate(order) + _compose(G, y)
    rhs = x * x * y * y
    return _ring_check(lhs, rhs, order)


def check_main2(order: int, branch: int = 0,
                f: Optional[Sequence[int]] = None) -> Optional[Term]:
    """F(x) + F(xi_b(x)) = R(x, xi_b(x))."""
    F = _f(_boundary_order(branch, order), f)
    y = _root(branch, order)
    lhs = F.truncate(order) + _compose(F, y)
    rhs = r_at(y)
    return _ring_check(lhs, rhs, order)


def _kernel_poly(degree: int) -> BivSeries:
    return BivSeries({(1, 1): 1, (3, 0): -1, (0, 3): -1}, degree)


def _biv_check(lhs: BivSeries, rhs: BivSeries, degree: int
               ) -> Optional[Term]:
    if min(lhs.degree, rhs.degree) < degree:
        raise TruncationError(
            f"Identity sides are only known through total degree "
            f"{min(lhs.degree, rhs.degree)}, {degree} was requested"
        )
    diff = lhs.first_difference(rhs, degree)
    return None if diff is None else tuple(Fraction(e) for e in diff)


def check_knight_kernel(degree: int,
                        q: Optional[Dict[Tuple[int, int], int]] = None,
                        g: Optional[Sequence[int]] = None) -> Optional[Term]:
    """(xy - x^3 - y^3) Q(x, y) = x^2 y^2 - G(x) - G(y)."""
    Q = BivSeries(knight_q(degree) if q is None else q, degree)
    G = _g(degree, g)
    lhs = _kernel_poly(degree) * Q
    rhs = (BivSeries.monomial(2, 2, degree) - BivSeries.from_univariate(G, 'x')
           - BivSeries.from_univariate(G, 'y'))
    return _biv_check(lhs, rhs, degree)


def check_cavalier(degree: int, a: Optional[BivSeries] = None,
                   f: Optional[Sequence[int]] = None) -> Optional[Term]:
    """(xy - x^3 - y^3) A(x, y) = R(x, y) - F(x) - F(y)."""
    A = a_series(degree) if a is None else a
    F = _f(degree, f)
    lhs = _kernel_poly(degree + 2) * A
    rhs = (r_series(degree) - BivSeries.from_univariate(F, 'x')
           - BivSeries.from_univariate(F, 'y'))
    return _biv_check(lhs, rhs, degree)


def diagonal_sides(order: int,
                   q: Optional[Dict[Tuple[int, int], int]] = None,
                   g: Optional[Sequence[int]] = None
                   ) -> Tuple[USeries, USeries]:
    """
    Both sides of the diagonal identity divided by t^4:

      sum_n Q_{n,n} t^(2n-2) = (1 - 2 S(t^3 U(t)) / t^4) / sqrt(1 - 4t^2),

    with U(t) = (1 - sqrt(1 - 4t^2)) / (2t) and S(z^3) = G(z).
    """
    work = order + 4
    if q is None:
        grid = count_quadrant(KNIGHT, (1, 1), order)
        q = grid.aggregate()
    diagonal = [Fraction(0)] * (order + 1)
    for (i, j), c in q.items():
        if i == j and 0 <= 2 * i - 2 <= order:
            diagonal[2 * i - 2] = Fraction(c)
    lhs = USeries(tuple(diagonal), order)

    t = USeries.x(work)
    root = (t * t * 4).sqrt1m()
    u = (1 - root).shift(-1) * Fraction(1, 2)
    inner = u.shift(3).truncate(work)
    G = _g(work, g)
    S = USeries(tuple(G[3 * k] for k in range(work // 3 + 1)), work // 3)
    numerator = USeries.monomial(4, work) - _compose(S, inner) * 2
    rhs = (root.reciprocal() * numerator).shift(-4)
    return lhs, rhs


def check_diagonal(order: int,
                   q: Optional[Dict[Tuple[int, int], int]] = None,
                   g: Optional[Sequence[int]] = None) -> Optional[Term]:
    lhs, rhs = diagonal_sides(order, q, g)
    return _ring_check(lhs, rhs, order)


def verify_identity(identity: Union[Identity, str], order: int,
                    branch: int = 0,
                    g: Optional[Sequence[int]] = None,
                    q: Optional[Dict[Tuple[int, int], int]] = None,
                    f: Optional[Sequence[int]] = None,
                    a: Optional[BivSeries] = None) -> IdentityReport:
    """
    Check one identity on every coefficient through ``order``.

    :param identity: main, knight-kernel, diagonal, main2 or cavalier.
    :param order: Truncation order in x (or t), or the total degree for the
        bivariate identities.
    :param branch: Kernel root used by main and main2 (0, 1 or 2).
    :param g: Override for the coefficients g_0.. of G.
    :param q: Override for the aggregated counts Q_{i,j}.
    :param f: Override for the coefficients f_0.. of F.
    :param a: Override for A(x, y).
    :return: The report; insufficient overrides raise TruncationError.
    """
    identity = Identity(identity)
    if order < 0:
        raise DomainError(f"Order must be nonnegative, got {order}",
                          field="order")
    if identity is Identity.MAIN:
        failure = check_main(order, branch, g)
    elif identity is Identity.MAIN2:
        failure = check_main2(order, branch, f)
    elif identity is Identity.KNIGHT_KERNEL:
        failure = check_knight_kernel(order, q, g)
    elif identity is Identity.DIAGONAL:
        failure = check_diagonal(order, q, g)
    else:
        failure = check_cavalier(order, a, f)
    uses_branch = identity in (Identity.MAIN, Identity.MAIN2)
    report = IdentityReport(identity, order, branch if uses_branch else None,
                            failure is None, failure)
    logger.info("Identity %s (order %d%s): %s", identity.value, order,
                f", branch {branch}" if uses_branch else "",
                "holds" if report.holds else f"fails at {failure}")
    return report
