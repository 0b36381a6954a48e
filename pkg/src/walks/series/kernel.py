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
The three roots of the knight kernel x^3 + y^3 = xy as exact series.

xi0 = xi(x) is a power series in x; the two other roots are
-xi/2 +/- sqrt(x) psi(x).
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple, Union

from ..shared.errors import DomainError
from .sqrt_series import SqrtSeries
from .useries import USeries

logger = logging.getLogger(__name__)


class Branch(str, Enum):
    XI0 = "Xi0"
    XI1 = "Xi1"
    XI2 = "Xi2"

    @classmethod
    def from_index(cls, index: int) -> 'Branch':
        if index not in (0, 1, 2):
            raise DomainError(f"Branch index must be 0, 1 or 2, got {index}",
                              field="branch")
        return list(cls)[index]

    @property
    def index(self) -> int:
        return list(Branch).index(self)


def xi_series(order: int) -> USeries:
    """
    xi(x) = x^2 sum_m C(3m, m) / (2m + 1) x^(3m), the power-series root.

    :param order: Truncation order N >= 2.
    """
    if order < 2:
        raise DomainError(f"xi needs order >= 2, got {order}", field="order")
    coeffs = [Fraction(0)] * (order + 1)
    m = 0
    while 3 * m + 2 <= order:
        coeffs[3 * m + 2] = Fraction(math.comb(3 * m, m), 2 * m + 1)
        m += 1
    return USeries(tuple(coeffs), order)


def psi_series(order: int) -> USeries:
    """
    psi(x) = 1 - sum_{m>=1} m! (6m)! / ((6m-1) (2m)!^2 (3m)!) x^(3m) / 16^m.
    """
    if order < 0:
        raise DomainError(f"psi needs order >= 0, got {order}", field="order")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    m = 1
    while 3 * m <= order:
        numerator = math.factorial(m) * math.factorial(6 * m)
        denominator = ((6 * m - 1) * math.factorial(2 * m) ** 2
                       * math.factorial(3 * m) * 16 ** m)
        coeffs[3 * m] = -Fraction(numerator, denominator)
        m += 1
    return USeries(tuple(coeffs), order)


def kernel_root_series(branch: Union[Branch, int], order: int) -> SqrtSeries:
    """
    One root of y^3 - xy + x^3 = 0 in the form A(x) + sqrt(x) B(x).

    :param branch: Xi0 -> (xi, 0); Xi1 -> (-xi/2, psi); Xi2 -> (-xi/2, -psi).
    :param order: Truncation order N >= 2.
    """
    if not isinstance(branch, Branch):
        branch = Branch.from_index(branch)
    xi = xi_series(order)
    if branch is Branch.XI0:
        return SqrtSeries.from_useries(xi)
    half = xi * Fraction(-1, 2)
    psi = psi_series(order)
    return SqrtSeries(half, psi if branch is Branch.XI1 else -psi)


def kernel_roots(order: int) -> Dict[Branch, SqrtSeries]:
    return {b: kernel_root_series(b, order) for b in Branch}


def kernel_residual(y: Union[USeries, SqrtSeries]) -> Union[USeries,
                                                              SqrtSeries]:
    """x^3 + y^3 - xy, evaluated in the ring of ``y``."""
    x = USeries.x(y.order)
    return y * y * y - x * y + x * x * x


def elementary_symmetric(order: int
                         ) -> Tuple[SqrtSeries, SqrtSeries, SqrtSeries]:
    """
    e1, e2, e3 of the three root series; expected to be 0, -x and -x^3.
    """
    r0, r1, r2 = (kernel_root_series(b, order) for b in Branch)
    e1 = r0 + r1 + r2
    e2 = r0 * r1 + r0 * r2 + r1 * r2
    e3 = r0 * r1 * r2
    return e1.truncate(order), e2.truncate(order), e3.truncate(order)


def g_series_iterated(order: int) -> USeries:
    """
    G(x) = sum_i (-1)^i (xi^(i)(x) xi^(i+1)(x))^2, xi^(0) = x and
    xi^(i+1) = xi(xi^(i)).

    Summation stops once a term's valuation 2 (v_i + v_{i+1}) exceeds N.

    :param order: Truncation order N >= 6.
    """
    if order < 6:
        raise DomainError(f"G needs order >= 6, got {order}", field="order")
    xi = xi_series(order)
    previous, current = USeries.x(order), xi
    total = USeries.zero(order)
    sign = 1
    i = 0
    while 2 * (previous.valuation() + current.valuation()) <= order:
        product = previous * current
        total = total + (product * product).truncate(order) * sign
        previous, current = current, xi.compose(current)
        sign = -sign
        i += 1
    logger.info("Iterated G to order %d with %d terms", order, i)
    return total


def r_at(y: Union[USeries, SqrtSeries]) -> Union[USeries, SqrtSeries]:
    """
    R(x, y(x)) = x y ((1 + y)/(1 - x) + (1 + x)/(1 - y)) in the ring of
    ``y``, which must have no constant term.
    """
    order = y.order
    x = USeries.x(order)
    one_minus_x_inv = (1 - x).reciprocal()
    one_minus_y_inv = (1 - y).reciprocal()
    return x * y * ((1 + y) * one_minus_x_inv + (1 + x) * one_minus_y_inv)
