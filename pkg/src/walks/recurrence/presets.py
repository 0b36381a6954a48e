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
Recurrences coming from walks: the walk-counting embedding of any step set,
and the two-dimensional knight-shaped recurrence a_{i,j} = a_{i+1,j-2} +
a_{i-2,j+1} with its boundary series F and A.
"""
from fractions import Fraction
from typing import Dict, List, Tuple

from ..series.biv_series import BivSeries
from ..shared.errors import DomainError
from ..stepset import StepSet
from .engine import RankingWeight, evaluate
from .spec import InitialCondition, RecurrenceSpec


def walk_translation(s: StepSet) -> Tuple[int, int]:
    """Index translation (tx, ty) used by :func:`from_stepset`."""
    return (max(0, max(h for h, _ in s.steps)),
            max(0, max(k for _, k in s.steps)))


def from_stepset(s: StepSet, start: Tuple[int, int]) -> RecurrenceSpec:
    """
    Three-dimensional recurrence whose solution counts quadrant walks:
    a(i + tx, j + ty, n) = Q_{i,j}(n).

    :param s: Step set.
    :param start: Walk start (i0, j0) in the quadrant.
    """
    i0, j0 = start
    if i0 < 0 or j0 < 0:
        raise DomainError(f"Start {start} lies outside the quadrant",
                          field="start")
    tx, ty = walk_translation(s)
    shifts = {(-h, -k, -1): Fraction(1) for h, k in s.steps}
    return RecurrenceSpec(
        d=3,
        shifts=shifts,
        start=(tx, ty, 1),
        initial=InitialCondition.indicator((i0 + tx, j0 + ty, 0)),
    )


def walk_counts(s: StepSet, start: Tuple[int, int], n_max: int,
                reach: int) -> Dict[Tuple[int, int, int], int]:
    """
    Q_{i,j}(n) for 0 <= i, j <= reach and n <= n_max, through the
    recurrence engine.
    """
    tx, ty = walk_translation(s)
    values = evaluate(from_stepset(s, start),
                      [(tx, tx + reach), (ty, ty + reach), (0, n_max)],
                      weight=RankingWeight((Fraction(0), Fraction(0),
                                            Fraction(1))))
    return {(i - tx, j - ty, n): int(v) for (i, j, n), v in values.items()}


def rec2_spec() -> RecurrenceSpec:
    """a_{i,j} = a_{i+1,j-2} + a_{i-2,j+1} for i, j >= 2; a = 1 elsewhere."""
    return RecurrenceSpec(
        d=2,
        shifts={(1, -2): Fraction(1), (-2, 1): Fraction(1)},
        start=(2, 2),
        initial=InitialCondition.constant(1),
    )


REC2_WEIGHT = RankingWeight((Fraction(1), Fraction(1)))


def rec2_table(size: int) -> Dict[Tuple[int, int], int]:
    """a_{i,j} for 0 <= i, j < size."""
    values = evaluate(rec2_spec(), [(0, size - 1), (0, size - 1)],
                      weight=REC2_WEIGHT)
    return {k: int(v) for k, v in values.items()}


def f_sequence(n_max: int) -> List[int]:
    """
    Coefficients f_0..f_{n_max} of F(x) = sum_{i>=2} a_{i,2} x^(i+1).
    """
    if n_max < 2:
        raise DomainError(f"F needs n_max >= 2, got {n_max}", field="n_max")
    points = [(i, 2) for i in range(2, n_max)]
    values = evaluate(rec2_spec(), points, weight=REC2_WEIGHT, as_box=False)
    f = [0] * (n_max + 1)
    for (i, _), v in values.items():
        f[i + 1] = int(v)
    return f


def a_series(degree: int) -> BivSeries:
    """A(x, y) = sum_{i,j>=2} a_{i,j} x^(i-2) y^(j-2) through total degree."""
    if degree < 0:
        raise DomainError(f"Degree must be nonnegative, got {degree}",
                          field="degree")
    points = [(a + 2, b + 2) for a in range(degree + 1)
              for b in range(degree + 1 - a)]
    values = evaluate(rec2_spec(), points, weight=REC2_WEIGHT, as_box=False)
    return BivSeries({(i - 2, j - 2): v for (i, j), v in values.items()},
                     degree)
