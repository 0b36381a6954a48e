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
Truncated univariate power series with exact rational coefficients.

A ``USeries`` of order N is known modulo x^(N+1). Every operation returns
the largest order its operands determine:

  - sum:          min(Na, Nb)
  - product:      min(Na + val(b), Nb + val(a))
  - f(g):         min(Ng, (Nf + 1) * val(g) - 1)
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..shared.errors import DomainError, TruncationError

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise DomainError(f"Series coefficients must be exact rationals, got "
                      f"{type(c).__name__}", field="coeffs")


@dataclass(frozen=True)
class USeries:
    coeffs: Tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < -1:
            raise DomainError(f"Invalid order {self.order}", field="order")
        cs = [_frac(c) for c in self.coeffs[:self.order + 1]]
        cs.extend([Fraction(0)] * (self.order + 1 - len(cs)))
        object.__setattr__(self, 'coeffs', tuple(cs))

    @classmethod
    def of(cls, coeffs: Iterable, order: Optional[int] = None) -> 'USeries':
        cs = list(coeffs)
        return cls(tuple(cs), len(cs) - 1 if order is None else order)

    @classmethod
    def zero(cls, order: int) -> 'USeries':
        return cls((), order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> 'USeries':
        return cls((c,), order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> 'USeries':
        cs = [0] * (k + 1)
        cs[k] = c
        return cls(tuple(cs), order)

    @classmethod
    def x(cls, order: int) -> 'USeries':
        return cls.monomial(1, order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise TruncationError(
                f"Coefficient of x^{k} requested from a series known "
                f"modulo x^{self.order + 1}"
            )
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int:
        """Index of the first non-zero coefficient, or order + 1."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def truncate(self, order: int) -> 'USeries':
        if order > self.order:
            raise TruncationError(
                f"Cannot extend a series of order {self.order} to {order}"
            )
        return USeries(self.coeffs, order)

    def _coerce(self, other) -> Optional['USeries']:
        if isinstance(other, USeries):
            return other
        if isinstance(other, (int, Fraction)):
            return USeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return USeries(tuple(a + b for a, b in zip(self.coeffs[:order + 1],
                                                   other.coeffs[:order + 1])),
                       order)

    __radd__ = __add__

    def __neg__(self) -> 'USeries':
        return USeries(tuple(-c for c in self.coeffs), self.order)

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
            return USeries(tuple(c * other for c in self.coeffs), self.order)
        if not isinstance(other, USeries):
            return NotImplemented
        va, vb = self.valuation(), other.valuation()
        order = min(self.order + vb, other.order + va)
        out = [Fraction(0)] * (order + 1)
        for a, ca in enumerate(self.coeffs):
            if not ca or a > order:
                continue
            for b in range(0, min(order - a, other.order) + 1):
                cb = other.coeffs[b]
                if cb:
                    out[a + b] += ca * cb
        return USeries(tuple(out), order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'USeries':
        if k < 0:
            raise DomainError("Negative powers need reciprocal()",
                              field="k")
        result = USeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> 'USeries':
        """Multiply by x^k; negative k divides and needs val >= -k."""
        if k >= 0:
            return USeries((Fraction(0),) * k + self.coeffs, self.order + k)
        if self.valuation() < -k:
            raise DomainError(f"Cannot divide by x^{-k}: valuation is "
                              f"{self.valuation()}", field="k")
        return USeries(self.coeffs[-k:], self.order + k)

    def compose(self, inner: 'USeries') -> 'USeries':
        """
        self(inner(x)) for an inner series with zero constant term.
        """
        v = inner.valuation()
        if v == 0:
            raise DomainError("Composition needs an inner series with zero "
                              "constant term", field="inner")
        order = min(inner.order, (self.order + 1) * v - 1)
        inner = inner.truncate(order)
        top = min(self.order, order // v)
        result = USeries.constant(self.coeffs[top], order)
        for k in range(top - 1, -1, -1):
            result = (result * inner).truncate(order) + self.coeffs[k]
        return result

    def reciprocal(self) -> 'USeries':
        c0 = self.coeffs[0] if self.order >= 0 else Fraction(0)
        if not c0:
            raise DomainError("Reciprocal needs a non-zero constant term",
                              field="series")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * out[n - k]
                       for k in range(1, n + 1) if self.coeffs[k]),
                      Fraction(0))
            out.append(-inv0 * acc)
        return USeries(tuple(out), self.order)

    def sqrt1m(self) -> 'USeries':
        """sqrt(1 - u) for a series u with zero constant term."""
        if self.order >= 0 and self.coeffs[0]:
            raise DomainError("sqrt1m needs a series with zero constant term",
                              field="series")
        a = [-c for c in self.coeffs]
        if a:
            a[0] = Fraction(1)
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = sum((out[k] * out[n - k] for k in range(1, n)), Fraction(0))
            out.append((a[n] - acc) / 2)
        return USeries(tuple(out), self.order)

    def derivative(self) -> 'USeries':
        return USeries(tuple(k * c for k, c in enumerate(self.coeffs)
                             if k > 0), self.order - 1)

    def evaluate(self, x: complex) -> complex:
        """Numeric value of the truncated polynomial at x (Horner)."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def first_difference(self, other: 'USeries',
                         upto: Optional[int] = None) -> Optional[int]:
        """Smallest exponent <= upto where the coefficients differ."""
        upto = min(self.order, other.order) if upto is None else upto
        for k in range(upto + 1):
            if self[k] != other[k]:
                return k
        return None

    def to_pairs(self) -> List[List[str]]:
        return [[str(c.numerator), str(c.denominator)] for c in self.coeffs]


def from_integers(values: Sequence[int], order: Optional[int] = None
                  ) -> USeries:
    """Series with the given integer coefficients (e.g. a counting sequence)."""
    if order is None:
        order = len(values) - 1
    if len(values) < order + 1:
        raise TruncationError(
            f"{len(values)} coefficients cannot determine a series of "
            f"order {order}"
        )
    return USeries(tuple(values[:order + 1]), order)


UNARY_OPS = ('reciprocal', 'sqrt1m')
BINARY_OPS = ('add', 'sub', 'mul', 'compose')


def arith(a: USeries, b: Optional[USeries], op: str) -> USeries:
    """
    Dispatch one series operation by name.

    :param op: add, sub, mul, compose (a(b(x))), reciprocal or sqrt1m; the
        unary operations ignore ``b``.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'compose':
        return a.compose(b)
    if op == 'reciprocal':
        return a.reciprocal()
    if op == 'sqrt1m':
        return a.sqrt1m()
    raise DomainError(f"Unknown series operation '{op}'", field="op")
