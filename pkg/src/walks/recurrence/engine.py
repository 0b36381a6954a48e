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
Validity, apex classification and evaluation of recurrence specs.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..shared.errors import DomainError
from .simplex import LPStatus, solve
from .spec import Point, RecurrenceSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankingWeight:
    """w >= 0 with w.h <= -1 for every shift h."""
    w: Tuple[Fraction, ...]

    def rank(self, n: Sequence[int]) -> Fraction:
        return sum((wk * k for wk, k in zip(self.w, n)), Fraction(0))

    def check(self, spec: RecurrenceSpec) -> bool:
        return (all(wk >= 0 for wk in self.w)
                and all(self.rank(h) <= -1 for h in spec.shifts))


@dataclass(frozen=True)
class Invalid:
    """
    Convex combination of shifts lying in the nonnegative orthant:
    lambda >= 0, sum lambda = 1, sum lambda_h h >= 0.
    """
    witness: Dict[Point, Fraction]

    def combination(self) -> Tuple[Fraction, ...]:
        d = len(next(iter(self.witness)))
        return tuple(
            sum((lam * h[k] for h, lam in self.witness.items()), Fraction(0))
            for k in range(d)
        )

    def check(self, spec: RecurrenceSpec) -> bool:
        return (set(self.witness) <= set(spec.shifts)
                and all(lam >= 0 for lam in self.witness.values())
                and sum(self.witness.values()) == 1
                and all(v >= 0 for v in self.combination()))


def validate(spec: RecurrenceSpec) -> Union[RankingWeight, Invalid]:
    """
    Look for a ranking weight with an exact LP; when none exists, return
    the convex-combination witness instead.

    Among all ranking weights the one minimising sum(w) is returned; ties
    go to the weight carrying most of that sum on the last coordinate.
    """
    shifts = list(spec.shifts)
    d, m = spec.d, len(shifts)

    # -h.w - s_h = 1, with w, s >= 0
    A = [[-k for k in h] + [-int(i == r) for i in range(m)]
         for r, h in enumerate(shifts)]
    result = solve(A, [1] * m, [1] * d + [0] * m)
    if result.status is LPStatus.OPTIMAL:
        if d > 1:
            # ties: least weight off the last coordinate at the same sum(w)
            tied = solve(A + [[1] * d + [0] * m],
                         [1] * m + [result.objective],
                         [1] * (d - 1) + [0] * (m + 1))
            result = tied if tied.status is LPStatus.OPTIMAL else result
        weight = RankingWeight(tuple(result.x[:d]))
        logger.info("Recurrence is valid with ranking weight %s",
                    [str(v) for v in weight.w])
        return weight

    # sum_h lambda_h h_k - t_k = 0 and sum_h lambda_h = 1
    A = [[h[k] for h in shifts] + [-int(i == k) for i in range(d)]
         for k in range(d)]
    A.append([1] * m + [0] * d)
    result = solve(A, [0] * d + [1])
    if result.status is not LPStatus.OPTIMAL:
        raise DomainError("Neither a ranking weight nor a witness exists; "
                          "the shift set is malformed", field="shifts")
    witness = {h: lam for h, lam in zip(shifts, result.x[:m]) if lam}
    logger.info("Recurrence is invalid; witness %s",
                {str(h): str(v) for h, v in witness.items()})
    return Invalid(witness)


class GFClass(str, Enum):
    RATIONAL = "Rational"
    ALGEBRAIC = "Algebraic"
    UNKNOWN = "Unknown"


def apex_and_class(spec: RecurrenceSpec) -> Tuple[Point, GFClass]:
    """
    Componentwise maximum of H together with 0, and what it predicts for
    the generating function of the solution.
    """
    apex = tuple(max([0] + [h[k] for h in spec.shifts])
                 for k in range(spec.d))
    positive = sum(1 for a in apex if a > 0)
    if positive == 0:
        return apex, GFClass.RATIONAL
    if positive == 1:
        return apex, GFClass.ALGEBRAIC
    return apex, GFClass.UNKNOWN


Box = Sequence[Tuple[int, int]]


def box_points(box: Box) -> Iterable[Point]:
    return itertools.product(*(range(lo, hi + 1) for lo, hi in box))


def parse_box(text: str) -> List[Tuple[int, int]]:
    """``"0:12,0:12"`` -> [(0, 12), (0, 12)]; a bare ``k`` means k:k."""
    box = []
    for part in (p.strip() for p in text.split(',') if p.strip()):
        lo, sep, hi = part.partition(':')
        try:
            box.append((int(lo), int(hi if sep else lo)))
        except ValueError:
            raise DomainError(f"Cannot parse box range '{part}'", field="box")
    return box


def evaluate(spec: RecurrenceSpec,
             points: Union[Box, Iterable[Point]],
             weight: Optional[RankingWeight] = None,
             as_box: bool = True) -> Dict[Point, Fraction]:
    """
    Exact values a_n at the requested points.

    Only the dependency closure of the request is computed, in increasing
    order of w.n, so no recursion is involved.

    :param points: A box [(lo, hi), ...] (inclusive), or with ``as_box``
        false an iterable of points.
    :param weight: Ranking weight; found with :func:`validate` if omitted.
    :return: Mapping from every requested point to its value.
    """
    if weight is None:
        found = validate(spec)
        if isinstance(found, Invalid):
            raise DomainError(
                "The convex hull of the shifts meets the nonnegative "
                f"orthant (witness {found.witness}); evaluation would not "
                "terminate", field="shifts"
            )
        weight = found
    elif not weight.check(spec):
        raise DomainError("Ranking weight does not certify this spec",
                          field="weight")

    if as_box:
        if len(points) != spec.d:
            raise DomainError(f"Box has {len(points)} ranges for dimension "
                              f"{spec.d}", field="box")
        requested = list(box_points(points))
    else:
        requested = [tuple(p) for p in points]

    needed = set()
    stack = list(requested)
    while stack:
        n = stack.pop()
        if n in needed:
            continue
        needed.add(n)
        if spec.is_recursive_point(n):
            for h in spec.shifts:
                dependency = tuple(a + b for a, b in zip(n, h))
                if dependency not in needed:
                    stack.append(dependency)

    values: Dict[Point, Fraction] = {}
    for n in sorted(needed, key=weight.rank):
        if spec.is_recursive_point(n):
            values[n] = sum(
                (c * values[tuple(a + b for a, b in zip(n, h))]
                 for h, c in spec.shifts.items()),
                Fraction(0)
            )
        else:
            values[n] = spec.initial(n)
    logger.info("Evaluated %d points (%d requested)", len(values),
                len(requested))
    return {n: values[n] for n in requested}
