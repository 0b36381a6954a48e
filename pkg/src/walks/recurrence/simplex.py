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
Two-phase simplex over exact rationals with Bland's anticycling rule.

Solves  min c.x  subject to  A x = b, x >= 0.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    x: Optional[List[Fraction]] = None
    objective: Optional[Fraction] = None


class Tableau:
    """
    Dense tableau with one row per constraint and a reduced-cost row.

    Columns 0..n-1 are the structural variables, n..n+m-1 the phase-one
    artificials; the last column holds the right-hand side.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows: List[List[Fraction]] = []
        for i, (row, rhs) in enumerate(zip(A, b)):
            row = [Fraction(v) for v in row]
            rhs = Fraction(rhs)
            if rhs < 0:
                row, rhs = [-v for v in row], -rhs
            artificial = [Fraction(int(k == i)) for k in range(self.m)]
            self.rows.append(row + artificial + [rhs])
        self.basis = [self.n + i for i in range(self.m)]
        self.cost: List[Fraction] = []
        self.pivots = 0

    @property
    def width(self) -> int:
        return self.n + self.m

    def set_cost(self, c: Sequence[Fraction]) -> None:
        """Reduced costs for objective ``c`` relative to the current basis."""
        c = [Fraction(v) for v in c] + [Fraction(0)] * (self.width + 1
                                                         - len(c))
        reduced = list(c)
        for i, var in enumerate(self.basis):
            cb = c[var]
            if cb:
                for j in range(self.width + 1):
                    reduced[j] -= cb * self.rows[i][j]
        self.cost = reduced

    def pivot(self, r: int, s: int) -> None:
        logger.debug("Pivot: x%d leaves, x%d enters", self.basis[r], s)
        row = self.rows[r]
        piv = row[s]
        self.rows[r] = row = [v / piv for v in row]
        for i in range(self.m):
            if i != r and self.rows[i][s]:
                f = self.rows[i][s]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], row)]
        if self.cost[s]:
            f = self.cost[s]
            self.cost = [a - f * b for a, b in zip(self.cost, row)]
        self.basis[r] = s
        self.pivots += 1

    def bland(self, allowed: int) -> LPStatus:
        """
        Run primal simplex iterations on columns ``0..allowed-1``.
        """
        while True:
            entering = next((j for j in range(allowed) if self.cost[j] < 0),
                            None)
            if entering is None:
                return LPStatus.OPTIMAL
            candidates = [
                (self.rows[i][-1] / self.rows[i][entering], self.basis[i], i)
                for i in range(self.m) if self.rows[i][entering] > 0
            ]
            if not candidates:
                return LPStatus.UNBOUNDED
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)

    def drive_out_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis; drop redundant rows."""
        i = 0
        while i < self.m:
            if self.basis[i] >= self.n:
                column = next((j for j in range(self.n) if self.rows[i][j]),
                              None)
                if column is None:
                    del self.rows[i]
                    del self.basis[i]
                    self.m -= 1
                    continue
                self.pivot(i, column)
            i += 1

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.rows[i][-1]
        return x


def solve(A: Sequence[Sequence], b: Sequence,
          c: Optional[Sequence] = None) -> LPResult:
    """
    Minimise c.x over {A x = b, x >= 0}; with ``c`` omitted only
    feasibility is decided.

    :param A: m x n constraint matrix of rationals.
    :param b: Right-hand side of length m.
    :param c: Objective of length n.
    :return: Status, an optimal basic solution and its objective value.
    """
    tableau = Tableau(A, b)
    n = tableau.n
    phase_one = [Fraction(0)] * n + [Fraction(1)] * tableau.m
    tableau.set_cost(phase_one)
    tableau.bland(tableau.width)
    if -tableau.cost[-1] != 0:
        logger.debug("Phase one ended with infeasibility %s",
                     -tableau.cost[-1])
        return LPResult(LPStatus.INFEASIBLE)
    tableau.drive_out_artificials()

    if c is None:
        return LPResult(LPStatus.OPTIMAL, tableau.solution(), Fraction(0))
    tableau.set_cost(list(c))
    status = tableau.bland(n)
    if status is LPStatus.UNBOUNDED:
        return LPResult(status)
    x = tableau.solution()
    logger.debug("Simplex finished after %d pivots", tableau.pivots)
    return LPResult(LPStatus.OPTIMAL, x,
                    sum((Fraction(cj) * xj for cj, xj in zip(c, x)),
                        Fraction(0)))
