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
Series of the form A(x) + sqrt(x) * B(x), the shape of the two conjugate
kernel roots.
"""
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..shared.errors import DomainError
from .useries import USeries


@dataclass(frozen=True)
class SqrtSeries:
    """
    ``even`` holds A, ``odd`` holds B. Both parts are known through x^N,
    N = :attr:`order`; the odd part contributes x^(k+1/2) terms.
    """
    even: USeries
    odd: USeries

    @classmethod
    def from_useries(cls, u: USeries) -> 'SqrtSeries':
        return cls(u, USeries.zero(u.order))

    @classmethod
    def constant(cls, c, order: int) -> 'SqrtSeries':
        return cls(USeries.constant(c, order), USeries.zero(order))

    @classmethod
    def sqrt_x(cls, order: int) -> 'SqrtSeries':
        return cls(USeries.zero(order), USeries.constant(1, order))

    @property
    def order(self) -> int:
        return min(self.even.order, self.odd.order)

    def half_valuation(self) -> int:
        """Twice the x-valuation: 2 * val(A) or 2 * val(B) + 1."""
        return min(2 * self.even.valuation(), 2 * self.odd.valuation() + 1)

    def truncate(self, order: int) -> 'SqrtSeries':
        return SqrtSeries(self.even.truncate(order), self.odd.truncate(order))

    def _coerce(self, other) -> Optional['SqrtSeries']:
        if isinstance(other, SqrtSeries):
            return other
        if isinstance(other, USeries):
            return SqrtSeries.from_useries(other)
        if isinstance(other, (int, Fraction)):
            return SqrtSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SqrtSeries(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self) -> 'SqrtSeries':
        return SqrtSeries(-self.even, -self.odd)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtSeries(self.even * other, self.odd * other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.even, self.odd, other.even, other.odd
        even = a1 * a2 + (b1 * b2).shift(1)
        odd = a1 * b2 + a2 * b1
        return SqrtSeries(even, odd)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'SqrtSeries':
        if k < 0:
            raise DomainError("Negative powers need reciprocal()", field="k")
        result = SqrtSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def reciprocal(self) -> 'SqrtSeries':
        """1 / (A + sqrt(x) B) = (A - sqrt(x) B) / (A^2 - x B^2)."""
        if self.even.order < 0 or not self.even[0]:
            raise DomainError("Reciprocal needs a non-zero constant term",
                              field="series")
        denominator = self.even * self.even - (self.odd * self.odd).shift(1)
        inv = denominator.reciprocal()
        return SqrtSeries(self.even * inv, -(self.odd * inv))

    def evaluate(self, x: complex) -> complex:
        """A(x) + sqrt(x) B(x) with the principal square root."""
        root = cmath.sqrt(x) if isinstance(x, complex) or x < 0 \
            else math.sqrt(x)
        return self.even.evaluate(x) + root * self.odd.evaluate(x)

    def first_difference(self, other: 'SqrtSeries',
                         upto: Optional[int] = None) -> Optional[Fraction]:
        """
        Smallest exponent where the two values differ; half-integer
        exponents come from the odd parts.
        """
        upto = min(self.order, other.order) if upto is None else upto
        for k in range(upto + 1):
            if self.even[k] != other.even[k]:
                return Fraction(k)
            if self.odd[k] != other.odd[k]:
                return Fraction(2 * k + 1, 2)
        return None

    def parts(self) -> Tuple[USeries, USeries]:
        return self.even, self.odd


def compose_into(f: USeries, y: SqrtSeries) -> SqrtSeries:
    """
    f(y(x)) for a SqrtSeries y with no constant term.

    With y of x-valuation v/2 the neglected tail is O(x^E), E = (Nf+1)v/2,
    so the even part is known below E and the odd part (exponents k + 1/2)
    as well; for half-integer E the odd part loses one coefficient. Terms
    of f up to y^((2N+1)/v) reach x^(N+1/2).
    """
    v = y.half_valuation()
    if v == 0:
        raise DomainError("Composition needs an inner series with zero "
                          "constant term", field="inner")
    p = (f.order + 1) * v
    order = min(y.order, -(-p // 2) - 1)
    odd_order = min(order, -(-(p - 1) // 2) - 1)
    y = y.truncate(order)
    top = min(f.order, (2 * order + 1) // v)
    result = SqrtSeries.constant(f[top], order)
    for k in range(top - 1, -1, -1):
        result = (result * y).truncate(order) + f[k]
    return SqrtSeries(result.even, result.odd.truncate(odd_order))
