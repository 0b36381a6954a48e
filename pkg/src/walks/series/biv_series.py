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
Bivariate series truncated by total degree.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from ..shared.errors import DomainError, TruncationError
from .useries import USeries

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class BivSeries:
    """
    sum c_{i,j} x^i y^j, known for every i + j <= ``degree``. Only non-zero
    coefficients are stored.
    """
    coeffs: Mapping[Monomial, Fraction]
    degree: int

    def __post_init__(self):
        cleaned: Dict[Monomial, Fraction] = {}
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0:
                raise DomainError(f"Negative exponent in x^{i} y^{j}",
                                  field="coeffs")
            c = Fraction(c)
            if c and i + j <= self.degree:
                cleaned[(i, j)] = c
        object.__setattr__(self, 'coeffs', cleaned)

    @classmethod
    def zero(cls, degree: int) -> 'BivSeries':
        return cls({}, degree)

    @classmethod
    def monomial(cls, i: int, j: int, degree: int, c=1) -> 'BivSeries':
        return cls({(i, j): c}, degree)

    @classmethod
    def from_univariate(cls, u: USeries, var: str = 'x') -> 'BivSeries':
        if var not in ('x', 'y'):
            raise DomainError(f"Unknown variable '{var}'", field="var")
        return cls({((k, 0) if var == 'x' else (0, k)): c
                    for k, c in enumerate(u.coeffs)}, u.order)

    def __getitem__(self, key: Monomial) -> Fraction:
        i, j = key
        if i + j > self.degree:
            raise TruncationError(
                f"Coefficient of x^{i} y^{j} requested from a series known "
                f"through total degree {self.degree}"
            )
        return self.coeffs.get((i, j), Fraction(0))

    def valuation(self) -> int:
        if not self.coeffs:
            return self.degree + 1
        return min(i + j for i, j in self.coeffs)

    def truncate(self, degree: int) -> 'BivSeries':
        if degree > self.degree:
            raise TruncationError(
                f"Cannot extend a series of degree {self.degree} to {degree}"
            )
        return BivSeries(self.coeffs, degree)

    def swap(self) -> 'BivSeries':
        """Exchange x and y."""
        return BivSeries({(j, i): c for (i, j), c in self.coeffs.items()},
                         self.degree)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivSeries.monomial(0, 0, self.degree, other)
        if not isinstance(other, BivSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        out: Dict[Monomial, Fraction] = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivSeries(out, degree)

    __radd__ = __add__

    def __neg__(self) -> 'BivSeries':
        return BivSeries({k: -c for k, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, BivSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivSeries({k: c * other for k, c in self.coeffs.items()},
                             self.degree)
        if not isinstance(other, BivSeries):
            return NotImplemented
        degree = min(self.degree + other.valuation(),
                     other.degree + self.valuation())
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                if i1 + j1 + i2 + j2 <= degree:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivSeries(out, degree)

    __rmul__ = __mul__

    def first_difference(self, other: 'BivSeries',
                         upto: Optional[int] = None) -> Optional[Monomial]:
        """
        First (i, j) where the two series differ, scanning by total degree
        and then by increasing i.
        """
        upto = min(self.degree, other.degree) if upto is None else upto
        for total in range(upto + 1):
            for i in range(total + 1):
                if self[(i, total - i)] != other[(i, total - i)]:
                    return i, total - i
        return None


def r_series(degree: int) -> BivSeries:
    """
    R(x, y) = xy((1 + y)/(1 - x) + (1 + x)/(1 - y)) through total degree
    ``degree``.
    """
    if degree < 2:
        raise DomainError(f"R needs total degree >= 2, got {degree}",
                          field="degree")
    out: Dict[Monomial, Fraction] = {}
    # xy (1 + y) / (1 - x) = sum_{a >= 0} (x^{a+1} y + x^{a+1} y^2)
    for a in range(degree):
        for extra in (1, 2):
            for key in ((a + 1, extra), (extra, a + 1)):
                if sum(key) <= degree:
                    out[key] = out.get(key, Fraction(0)) + 1
    return BivSeries(out, degree)
