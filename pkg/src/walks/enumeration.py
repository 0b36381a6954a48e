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
Exact walk counting in the quadrant and in the right half-plane.

Counts are Python integers, built layer by layer in the walk length n.
Each layer is a sparse mapping (i, j) -> count, since step sets such as
the knight only populate a few congruence classes.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import pandas as pd

from .shared.errors import DomainError
from .stepset import StepSet

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
Layer = Dict[Cell, int]


class Region(str, Enum):
    QUADRANT = "quadrant"
    RIGHT_HALF_PLANE = "half-plane"

    def contains(self, i: int, j: int) -> bool:
        if self is Region.QUADRANT:
            return i >= 0 and j >= 0
        return i >= 0


@dataclass(frozen=True)
class CountGrid:
    """
    Walk counts a_{i,j}(n) for 0 <= n <= n_max.

    ``layers[n]`` holds the non-zero counts of length-n walks; absent cells
    are zero.
    """
    steps: StepSet
    start: Cell
    region: Region
    n_max: int
    layers: Tuple[Layer, ...]

    def count(self, i: int, j: int, n: int) -> int:
        if n < 0 or n > self.n_max:
            return 0
        return self.layers[n].get((i, j), 0)

    def cells(self) -> Iterator[Tuple[int, int, int, int]]:
        """Yield (i, j, n, count) for every non-zero cell, sorted per layer."""
        for n, layer in enumerate(self.layers):
            for (i, j) in sorted(layer):
                yield i, j, n, layer[(i, j)]

    def aggregate(self) -> Dict[Cell, int]:
        """Counts summed over all computed lengths."""
        totals: Dict[Cell, int] = defaultdict(int)
        for layer in self.layers:
            for cell, c in layer.items():
                totals[cell] += c
        return dict(totals)

    def aggregated(self, i: int, j: int) -> int:
        return sum(layer.get((i, j), 0) for layer in self.layers)

    def to_frame(self, aggregate: bool = False) -> pd.DataFrame:
        """
        Long-format table with counts as decimal strings.

        :param aggregate: Sum over n; the ``n`` column is then dropped.
        """
        if aggregate:
            rows = [
                {'i': i, 'j': j, 'count': str(c)}
                for (i, j), c in sorted(self.aggregate().items())
            ]
            return pd.DataFrame(rows, columns=['i', 'j', 'count'])
        rows = [
            {'i': i, 'j': j, 'n': n, 'count': str(c)}
            for i, j, n, c in self.cells()
        ]
        return pd.DataFrame(rows, columns=['i', 'j', 'n', 'count'])

    def to_table(self) -> pd.DataFrame:
        """
        Aggregated counts laid out with j decreasing down the rows and i
        increasing across the columns; zero cells are blank.
        """
        totals = self.aggregate()
        if not totals:
            return pd.DataFrame()
        max_i = max(i for i, _ in totals)
        max_j = max(j for _, j in totals)
        min_j = min(j for _, j in totals)
        data = {
            i: [str(totals[(i, j)]) if totals.get((i, j)) else ''
                for j in range(max_j, min_j - 1, -1)]
            for i in range(0, max_i + 1)
        }
        return pd.DataFrame(data, index=list(range(max_j, min_j - 1, -1)))


def _count(s: StepSet, start: Cell, n_max: int, region: Region) -> CountGrid:
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}",
                          field="n_max")
    i0, j0 = start
    if not region.contains(i0, j0):
        raise DomainError(
            f"Start {start} lies outside the {region.value}", field="start"
        )

    layers: List[Layer] = [{(i0, j0): 1}]
    for _ in range(n_max):
        previous = layers[-1]
        layer: Layer = defaultdict(int)
        for (i, j), c in previous.items():
            for h, k in s.steps:
                if region.contains(i + h, j + k):
                    layer[(i + h, j + k)] += c
        layers.append(dict(layer))

    logger.info(
        "Counted %s walks from %s up to length %d: %d non-zero cells",
        region.value, start, n_max, sum(len(layer) for layer in layers)
    )
    return CountGrid(
        steps=s, start=(i0, j0), region=region, n_max=n_max,
        layers=tuple(layers)
    )


def count_quadrant(s: StepSet, start: Cell, n_max: int) -> CountGrid:
    """
    Count walks confined to i >= 0, j >= 0.

    :param s: Step set.
    :param start: Starting point (i0, j0) in the quadrant.
    :param n_max: Largest walk length.
    :return: The count grid.
    """
    return _count(s, start, n_max, Region.QUADRANT)


def count_half_plane(s: StepSet, start: Cell, n_max: int) -> CountGrid:
    """Count walks confined to i >= 0, with j unconstrained."""
    return _count(s, start, n_max, Region.RIGHT_HALF_PLANE)


def axis_sequence(grid: CountGrid, shift: int = 3,
                  order: Optional[int] = None) -> List[int]:
    """
    Coefficients g_m of x^shift * sum_i Q_{i,0} x^i, with Q aggregated over n.

    With the default shift this is G(x) for knight walks.

    :param order: Length of the result minus one; defaults to the largest
        populated index.
    """
    totals = grid.aggregate()
    bottom = {i: c for (i, j), c in totals.items() if j == 0 and c}
    if order is None:
        order = (max(bottom) + shift) if bottom else shift
    g = [0] * (order + 1)
    for i, c in bottom.items():
        if 0 <= i + shift <= order:
            g[i + shift] = c
    return g


def diagonal_sequence(grid: CountGrid,
                      upto: Optional[int] = None) -> List[int]:
    """Aggregated counts Q_{n,n} for n = 0..upto."""
    totals = grid.aggregate()
    if upto is None:
        diagonal = [i for (i, j), c in totals.items() if i == j and c]
        upto = max(diagonal) if diagonal else 0
    return [totals.get((n, n), 0) for n in range(upto + 1)]


def length_sequence(grid: CountGrid) -> List[int]:
    """a(n): the number of walks of length n, for n = 0..n_max."""
    return [sum(layer.values()) for layer in grid.layers]


def knight_bound(i: int, j: int) -> int:
    """
    Upper bound C(i+j-2, (2i+j-3)/3) on the number of knight walks from
    (1, 1) to (i, j), obtained by ignoring the quadrant constraint.
    Cells with i != j (mod 3) are unreachable and get 0.
    """
    n = i + j - 2
    if n < 0 or (2 * i + j - 3) % 3:
        return 0
    k = (2 * i + j - 3) // 3
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class LaurentPoly:
    """sum_k coeffs[k] * y^(low + k), with integer coefficients."""
    low: int
    coeffs: Tuple[int, ...]

    def coefficient(self, exponent: int) -> int:
        k = exponent - self.low
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        low = min(self.low, other.low)
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        return LaurentPoly(low, tuple(
            self.coefficient(e) + other.coefficient(e)
            for e in range(low, high)
        ))

    def __mul__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca:
                for b, cb in enumerate(other.coeffs):
                    out[a + b] += ca * cb
        return LaurentPoly(self.low + other.low, tuple(out))

    def total(self) -> int:
        return sum(self.coeffs)


def step_weights(s: StepSet) -> Dict[int, LaurentPoly]:
    """For each horizontal step size h, the weight sum_{(h,k) in s} y^k."""
    by_h: Dict[int, List[int]] = defaultdict(list)
    for h, k in s.steps:
        by_h[h].append(k)
    weights = {}
    for h, ks in by_h.items():
        low = min(ks)
        coeffs = [0] * (max(ks) - low + 1)
        for k in ks:
            coeffs[k - low] += 1
        weights[h] = LaurentPoly(low, tuple(coeffs))
    return weights


def half_line_weighted_counts(
    s: StepSet, start: Cell, n_max: int
) -> Dict[Tuple[int, int], LaurentPoly]:
    """
    Project half-plane walks on the x-axis: walks on the half-line i >= 0
    whose steps of size h carry the Laurent weight sum_k y^k.

    :return: Mapping (i, n) -> weight polynomial; the coefficient of y^j
        is the number of half-plane walks of length n ending at (i, j).
    """
    i0, j0 = start
    if i0 < 0:
        raise DomainError(f"Start {start} lies outside the half-plane",
                          field="start")
    weights = step_weights(s)
    layer = {i0: LaurentPoly(j0, (1,))}
    result = {(i0, 0): layer[i0]}
    for n in range(1, n_max + 1):
        nxt: Dict[int, LaurentPoly] = {}
        for i, poly in layer.items():
            for h, w in weights.items():
                if i + h < 0:
                    continue
                term = poly * w
                nxt[i + h] = nxt[i + h] + term if i + h in nxt else term
        layer = nxt
        for i, poly in layer.items():
            result[(i, n)] = poly
    return result


@dataclass(frozen=True)
class HittingCounts:
    """
    Per-length counts of quadrant walks, split by whether they visit the
    x-axis and by the parity of their final ordinate.
    """
    even: Tuple[int, ...]
    odd: Tuple[int, ...]
    never: Tuple[int, ...]

    def hitting(self, n: int) -> int:
        return self.even[n] + self.odd[n]


def axis_hitting_counts(s: StepSet, start: Cell, n_max: int) -> HittingCounts:
    """
    Count quadrant walks by (visits ordinate 0, end ordinate parity).

    :return: Tuples indexed by length n = 0..n_max.
    """
    i0, j0 = start
    if not Region.QUADRANT.contains(i0, j0):
        raise DomainError(f"Start {start} lies outside the quadrant",
                          field="start")
    layer: Dict[Tuple[int, int, bool], int] = {(i0, j0, j0 == 0): 1}
    even, odd, never = [], [], []

    def tally(current):
        e = o = m = 0
        for (i, j, hit), c in current.items():
            if not hit:
                m += c
            elif j % 2:
                o += c
            else:
                e += c
        even.append(e)
        odd.append(o)
        never.append(m)

    tally(layer)
    for _ in range(n_max):
        nxt: Dict[Tuple[int, int, bool], int] = defaultdict(int)
        for (i, j, hit), c in layer.items():
            for h, k in s.steps:
                if i + h >= 0 and j + k >= 0:
                    nxt[(i + h, j + k, hit or j + k == 0)] += c
        layer = dict(nxt)
        tally(layer)
    return HittingCounts(tuple(even), tuple(odd), tuple(never))


def translated_counts(s: StepSet, start: Cell, n_max: int) -> Tuple[int, ...]:
    """
    sum_{k=1..j0} of the walks from (i0, j0 - k) that visit the x-axis, per
    length. Shifting such a walk up by k gives a walk from ``start`` whose
    lowest ordinate is k, so this equals ``axis_hitting_counts(...).never``.
    """
    i0, j0 = start
    totals = [0] * (n_max + 1)
    for k in range(1, j0 + 1):
        hits = axis_hitting_counts(s, (i0, j0 - k), n_max)
        for n in range(n_max + 1):
            totals[n] += hits.hitting(n)
    return tuple(totals)
