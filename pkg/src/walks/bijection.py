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
The flip correspondence between quadrant walks that visit the x-axis and
half-plane walks ending at level 0 (even end ordinate) or -1 (odd).

A quadrant walk ending at ordinate e is sent to a half-plane walk by
reflecting, across the x-axis, the step that follows its last visit to
each level 0, 1, ..., L-1, where L = (e - target) / 2. The inverse
reflects the first steps reaching levels -1, ..., -L.
"""
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from .enumeration import Region
from .shared.errors import BijectionError, BijectionReason, DomainError
from .stepset import (
    Step, StepSet, has_small_height_variation, is_x_symmetric
)

Point = Tuple[int, int]


@dataclass(frozen=True)
class Walk:
    """
    A walk given by its start and its steps. When ``region`` is set the
    walk is checked against it on construction; it plays no part in
    equality.
    """
    start: Point
    steps: Tuple[Step, ...]
    region: Optional[Region] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'start', tuple(self.start))
        object.__setattr__(self, 'steps', tuple(tuple(s) for s in self.steps))
        if self.region is not None and not self.stays_in(self.region):
            raise BijectionError(
                f"Walk {self.steps} from {self.start} leaves the "
                f"{self.region.value}",
                BijectionReason.OUTSIDE_REGION,
            )

    @property
    def length(self) -> int:
        return len(self.steps)

    def vertices(self) -> List[Point]:
        x, y = self.start
        out = [(x, y)]
        for dx, dy in self.steps:
            x, y = x + dx, y + dy
            out.append((x, y))
        return out

    def ordinates(self) -> List[int]:
        return [y for _, y in self.vertices()]

    @property
    def end(self) -> Point:
        return self.vertices()[-1]

    def stays_in(self, region: Region) -> bool:
        return all(region.contains(x, y) for x, y in self.vertices())

    def hits_axis(self) -> bool:
        return 0 in self.ordinates()

    @property
    def end_level(self) -> int:
        return self.end[1]


def _check_step_set(walk: Walk, s: StepSet) -> None:
    if not is_x_symmetric(s):
        raise BijectionError(
            f"Step set {s.to_text()} is not symmetric about the x-axis",
            BijectionReason.ASYMMETRIC_STEPS,
        )
    if not has_small_height_variation(s):
        raise BijectionError(
            f"Step set {s.to_text()} has a step with |dy| > 1",
            BijectionReason.LARGE_HEIGHT_VARIATION,
        )
    for step in walk.steps:
        if step not in s:
            raise DomainError(f"Step {step} is not in {s.to_text()}",
                              field="walk")


def _check_target(target_level: int) -> None:
    if target_level not in (0, -1):
        raise DomainError(
            f"Target level must be 0 or -1, got {target_level}",
            field="target_level",
        )


def _reflect(steps: Tuple[Step, ...], indices: List[int]) -> Tuple[Step, ...]:
    chosen = set(indices)
    return tuple(
        (dx, -dy) if t in chosen else (dx, dy)
        for t, (dx, dy) in enumerate(steps)
    )


def last_visit_steps(walk: Walk, levels: int) -> List[int]:
    """
    Indices of the steps following the last visit to levels 0..levels-1.
    """
    ordinates = walk.ordinates()
    indices = []
    for level in range(levels):
        last = max(t for t, y in enumerate(ordinates) if y == level)
        indices.append(last)
    return indices


def first_passage_steps(walk: Walk, depth: int) -> List[int]:
    """Indices of the first steps reaching levels -1..-depth."""
    ordinates = walk.ordinates()
    indices = []
    for level in range(1, depth + 1):
        first = min(t for t, y in enumerate(ordinates) if y == -level)
        indices.append(first - 1)
    return indices


def flipped_indices(walk: Walk, down: bool = True,
                    target_level: int = 0) -> List[int]:
    """
    The steps :func:`flip_down` (``down=True``) or :func:`flip_up` would
    reflect. Preconditions are not checked here.
    """
    if down:
        return last_visit_steps(walk, (walk.end_level - target_level) // 2)
    return first_passage_steps(walk, max(-min(walk.ordinates()), 0))


def flip_down(walk: Walk, s: StepSet, target_level: int = 0) -> Walk:
    """
    Map a quadrant walk visiting the x-axis to a half-plane walk ending at
    ``target_level``.

    :param walk: Quadrant walk; its end ordinate must be even for target 0
        and odd for target -1.
    :param s: Step set, symmetric about the x-axis with |dy| <= 1.
    :param target_level: 0 or -1.
    :return: The image walk; its lowest ordinate is -(e - target) / 2.
    """
    _check_target(target_level)
    _check_step_set(walk, s)
    if not walk.stays_in(Region.QUADRANT):
        raise BijectionError(
            f"Walk {walk.steps} from {walk.start} leaves the quadrant",
            BijectionReason.OUTSIDE_REGION,
        )
    if not walk.hits_axis():
        raise BijectionError(
            f"Walk {walk.steps} from {walk.start} never visits ordinate 0",
            BijectionReason.NEVER_HITS_AXIS,
        )
    end = walk.end_level
    if (end - target_level) % 2:
        raise BijectionError(
            f"End ordinate {end} has the wrong parity for target level "
            f"{target_level}",
            BijectionReason.PARITY,
        )
    indices = last_visit_steps(walk, (end - target_level) // 2)
    return Walk(walk.start, _reflect(walk.steps, indices),
                region=Region.RIGHT_HALF_PLANE)


def flip_up(walk: Walk, s: StepSet, target_level: int = 0) -> Walk:
    """
    Inverse of :func:`flip_down`.

    :param walk: Half-plane walk ending at ``target_level``.
    :return: A quadrant walk visiting the x-axis and ending at
        target_level + 2 * depth, depth being minus the lowest ordinate.
    """
    _check_target(target_level)
    _check_step_set(walk, s)
    if walk.start[1] < 0 or not walk.stays_in(Region.RIGHT_HALF_PLANE):
        raise BijectionError(
            f"Walk {walk.steps} from {walk.start} is not a half-plane walk "
            "starting in the quadrant",
            BijectionReason.OUTSIDE_REGION,
        )
    if walk.end_level != target_level:
        raise BijectionError(
            f"Walk ends at ordinate {walk.end_level}, expected {target_level}",
            BijectionReason.WRONG_END_LEVEL,
        )
    depth = max(-min(walk.ordinates()), 0)
    indices = first_passage_steps(walk, depth)
    return Walk(walk.start, _reflect(walk.steps, indices),
                region=Region.QUADRANT)


def iter_walks(s: StepSet, start: Point, length: int,
               region: Region) -> Iterator[Walk]:
    """All walks of the given length from ``start`` that stay in ``region``."""
    if not region.contains(*start):
        return
    path: List[Step] = []

    def extend(x: int, y: int, remaining: int):
        if remaining == 0:
            yield Walk(start, tuple(path))
            return
        for dx, dy in s.steps:
            if region.contains(x + dx, y + dy):
                path.append((dx, dy))
                yield from extend(x + dx, y + dy, remaining - 1)
                path.pop()

    yield from extend(start[0], start[1], length)
