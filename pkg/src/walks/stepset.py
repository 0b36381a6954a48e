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
Step sets: the finite alphabets of planar lattice walks, and the
x-axis-symmetry / small-height-variation criterion for D-finiteness.
"""
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Tuple

from .shared.errors import DomainError, ParseError

Step = Tuple[int, int]

_PAIR = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


class Verdict(str, Enum):
    GUARANTEED_D_FINITE = "GuaranteedDFinite"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class StepSet:
    """
    A finite set of integer step vectors, stored sorted.

    ``max_step`` is derived: the largest |dx| or |dy| over all steps.
    """
    steps: Tuple[Step, ...]
    max_step: int = field(init=False)

    def __post_init__(self):
        steps = tuple(sorted((int(dx), int(dy)) for dx, dy in self.steps))
        if not steps:
            raise DomainError("A step set must contain at least one step",
                              field="steps")
        if len(set(steps)) != len(steps):
            raise DomainError(f"Duplicate steps in {list(self.steps)}",
                              field="steps")
        object.__setattr__(self, 'steps', steps)
        object.__setattr__(
            self, 'max_step', max(max(abs(dx), abs(dy)) for dx, dy in steps)
        )

    @classmethod
    def of(cls, steps: Iterable[Step]) -> 'StepSet':
        return cls(steps=tuple(tuple(s) for s in steps))

    @classmethod
    def from_text(cls, text: str) -> 'StepSet':
        """
        Parse the compact form ``"(2,-1);(-1,2)"``.

        :param text: Semicolon separated integer pairs.
        :return: The step set.
        """
        parts = [p.strip() for p in text.strip().split(';') if p.strip()]
        steps = []
        for part in parts:
            match = _PAIR.match(part)
            if match is None:
                raise ParseError(f"Cannot parse step '{part}' in '{text}'",
                                 field="steps")
            steps.append((int(match.group(1)), int(match.group(2))))
        return cls.of(steps)

    @classmethod
    def from_json(cls, text: str) -> 'StepSet':
        """Parse a JSON array of ``[dx, dy]`` pairs."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON step set: {e}", field="steps")
        if not isinstance(data, list) or not all(
            isinstance(p, list) and len(p) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) for c in p)
            for p in data
        ):
            raise ParseError("A JSON step set is an array of [dx, dy] "
                             "integer pairs", field="steps")
        return cls.of(data)

    @classmethod
    def parse(cls, text: str) -> 'StepSet':
        """Accept either the compact or the JSON form."""
        if text.strip().startswith('['):
            return cls.from_json(text)
        return cls.from_text(text)

    def to_text(self) -> str:
        return ";".join(f"({dx},{dy})" for dx, dy in self.steps)

    def to_json(self) -> str:
        return json.dumps([list(s) for s in self.steps])

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def __contains__(self, step) -> bool:
        return tuple(step) in self.steps


def is_x_symmetric(s: StepSet) -> bool:
    """True iff (dx, dy) in s implies (dx, -dy) in s."""
    return all((dx, -dy) in s for dx, dy in s)


def has_small_height_variation(s: StepSet) -> bool:
    """True iff every step has |dy| <= 1."""
    return all(abs(dy) <= 1 for _, dy in s)


def holonomy_criterion(s: StepSet) -> Verdict:
    """
    Sufficient condition for a D-finite length generating function.

    The criterion is not necessary: a step set failing it is reported as
    ``Unknown``, never as non-D-finite.
    """
    if is_x_symmetric(s) and has_small_height_variation(s):
        return Verdict.GUARANTEED_D_FINITE
    return Verdict.UNKNOWN


SQUARE = StepSet.of([(0, 1), (1, 0), (0, -1), (-1, 0)])
DIAGONAL = StepSet.of([(1, 1), (1, -1), (-1, 1), (-1, -1)])
KNIGHT = StepSet.of([(2, -1), (-1, 2)])
KREWERAS = StepSet.of([(1, 1), (0, -1), (-1, 0)])

PRESETS: Dict[str, StepSet] = {
    'square': SQUARE,
    'diagonal': DIAGONAL,
    'knight': KNIGHT,
    'kreweras': KREWERAS,
}

DEFAULT_LEGEND: Dict[str, Step] = {
    'N': (0, 1), 'E': (1, 0), 'S': (0, -1), 'W': (-1, 0),
    'NE': (1, 1), 'NW': (-1, 1), 'SE': (1, -1), 'SW': (-1, -1),
}


def resolve_step_set(text: str) -> StepSet:
    """Preset name, compact text or JSON."""
    key = text.strip().lower()
    if key in PRESETS:
        return PRESETS[key]
    return StepSet.parse(text)


def parse_legend(text: str) -> Dict[str, Step]:
    """
    Parse a legend such as ``"A=(2,-1);B=(-1,2)"``.

    :return: Mapping from step name to vector.
    """
    legend = {}
    for part in (p.strip() for p in text.split(';') if p.strip()):
        name, sep, vec = part.partition('=')
        match = _PAIR.match(vec.strip())
        if not sep or not name.strip() or match is None:
            raise ParseError(f"Cannot parse legend entry '{part}'",
                             field="legend")
        legend[name.strip()] = (int(match.group(1)), int(match.group(2)))
    return legend


def parse_named_steps(text: str, legend: Dict[str, Step]) -> List[Step]:
    """Translate ``"N,N,E,S"`` into vectors through ``legend``."""
    steps = []
    for name in (n.strip() for n in text.split(',') if n.strip()):
        if name not in legend:
            raise ParseError(f"Unknown step name '{name}'", field="walk")
        steps.append(legend[name])
    return steps


def name_steps(steps: Iterable[Step], legend: Dict[str, Step]) -> List[str]:
    """Inverse of :func:`parse_named_steps`; unnamed vectors print as pairs."""
    inverse = {v: k for k, v in legend.items()}
    return [inverse.get(tuple(s), f"({s[0]},{s[1]})") for s in steps]
