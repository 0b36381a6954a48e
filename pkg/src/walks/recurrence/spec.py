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
Recurrence specifications

    a_n = sum_{h in H} c_h a_{n+h}   for n >= s,
    a_n = phi(n)                    for n >= 0 with n not >= s,

and their JSON form.
"""
import json
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError, field_validator

from ..shared.errors import DomainError, ParseError

Point = Tuple[int, ...]


class Extension(str, Enum):
    """How the initial function answers for points with a negative
    coordinate."""
    ZERO = "zero"
    STRICT = "strict"


class InitialKind(str, Enum):
    CONSTANT = "constant"
    POINT = "point"
    TABLE = "table"


@dataclass(frozen=True)
class InitialCondition:
    """
    phi(n) as a small expression:

      - ``constant``: ``value`` everywhere;
      - ``point``: ``value`` at ``point`` and 0 elsewhere;
      - ``table``: ``table[n]``, with ``value`` for missing entries.
    """
    kind: InitialKind
    value: Fraction = Fraction(0)
    point: Optional[Point] = None
    table: Dict[Point, Fraction] = field(default_factory=dict)
    extension: Extension = Extension.ZERO

    @classmethod
    def constant(cls, value=1, extension: Extension = Extension.ZERO
                 ) -> 'InitialCondition':
        return cls(InitialKind.CONSTANT, Fraction(value), extension=extension)

    @classmethod
    def indicator(cls, point: Point, value=1,
                  extension: Extension = Extension.ZERO
                  ) -> 'InitialCondition':
        return cls(InitialKind.POINT, Fraction(value), point=tuple(point),
                   extension=extension)

    @classmethod
    def lookup(cls, table: Dict[Point, Union[int, Fraction]], default=0,
               extension: Extension = Extension.ZERO) -> 'InitialCondition':
        return cls(InitialKind.TABLE, Fraction(default),
                   table={tuple(k): Fraction(v) for k, v in table.items()},
                   extension=extension)

    def __call__(self, n: Point) -> Fraction:
        if any(k < 0 for k in n):
            if self.extension is Extension.ZERO:
                return Fraction(0)
            raise DomainError(
                f"Initial condition is undefined at {n}; negative "
                "coordinates need the zero extension", field="initial"
            )
        if self.kind is InitialKind.CONSTANT:
            return self.value
        if self.kind is InitialKind.POINT:
            return self.value if tuple(n) == self.point else Fraction(0)
        return self.table.get(tuple(n), self.value)


@dataclass(frozen=True)
class RecurrenceSpec:
    """
    ``shifts`` maps each h in H to its non-zero coefficient c_h.
    """
    d: int
    shifts: Dict[Point, Fraction]
    start: Point
    initial: InitialCondition

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"Dimension must be positive, got {self.d}",
                              field="d")
        if not self.shifts:
            raise DomainError("A recurrence needs at least one shift",
                              field="shifts")
        shifts = {}
        for h, c in self.shifts.items():
            h = tuple(int(k) for k in h)
            if len(h) != self.d:
                raise DomainError(f"Shift {h} does not have dimension {self.d}",
                                  field="shifts")
            c = Fraction(c)
            if not c:
                raise DomainError(f"Shift {h} has a zero coefficient",
                                  field="shifts")
            shifts[h] = c
        object.__setattr__(self, 'shifts', shifts)
        start = tuple(int(k) for k in self.start)
        if len(start) != self.d:
            raise DomainError(f"Start {start} does not have dimension "
                              f"{self.d}", field="start")
        object.__setattr__(self, 'start', start)
        for h in shifts:
            if any(s + k < 0 for s, k in zip(start, h)):
                raise DomainError(
                    f"start + {h} leaves the nonnegative orthant", field="start"
                )

    def is_recursive_point(self, n: Point) -> bool:
        """True iff n >= s componentwise, where the recurrence applies."""
        return all(k >= s for k, s in zip(n, self.start))


class ShiftModel(BaseModel):
    h: List[int]
    c: str = "1"

    @field_validator('c')
    @classmethod
    def _rational(cls, v: str) -> str:
        try:
            Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"'{v}' is not a rational number")
        return v


class TableEntryModel(BaseModel):
    n: List[int]
    value: str


class InitialModel(BaseModel):
    kind: Literal["constant", "point", "table"] = "constant"
    value: str = "1"
    point: Optional[List[int]] = None
    table: List[TableEntryModel] = []
    extension: Literal["zero", "strict"] = "zero"


class SpecModel(BaseModel):
    d: int
    shifts: List[ShiftModel]
    start: List[int]
    initial: InitialModel = InitialModel()


def _initial_from_model(model: InitialModel) -> InitialCondition:
    extension = Extension(model.extension)
    if model.kind == "constant":
        return InitialCondition.constant(Fraction(model.value), extension)
    if model.kind == "point":
        if model.point is None:
            raise ParseError("A point initial condition needs 'point'",
                             field="initial")
        return InitialCondition.indicator(tuple(model.point),
                                          Fraction(model.value), extension)
    return InitialCondition.lookup(
        {tuple(e.n): Fraction(e.value) for e in model.table},
        Fraction(model.value), extension
    )


def parse_spec(text: str) -> RecurrenceSpec:
    """
    Parse a JSON recurrence spec such as
    ``{"d": 2, "shifts": [{"h": [1, -2], "c": "1"}], "start": [2, 2]}``.
    """
    try:
        model = SpecModel.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"Invalid recurrence spec: {e}", field="spec")
    shifts: Dict[Point, Fraction] = {}
    for shift in model.shifts:
        key = tuple(shift.h)
        if key in shifts:
            raise ParseError(f"Duplicate shift {key}", field="shifts")
        shifts[key] = Fraction(shift.c)
    return RecurrenceSpec(model.d, shifts, tuple(model.start),
                          _initial_from_model(model.initial))


def load_spec(path: str) -> RecurrenceSpec:
    if not os.path.isfile(path):
        raise DomainError(f"Spec file not found: {path}", field="spec")
    with open(path, "r") as f:
        return parse_spec(f.read())


def _fraction_text(v: Fraction) -> str:
    return str(v)


def spec_to_json(spec: RecurrenceSpec) -> str:
    initial = spec.initial
    payload = {
        "d": spec.d,
        "shifts": [{"h": list(h), "c": _fraction_text(c)}
                   for h, c in spec.shifts.items()],
        "start": list(spec.start),
        "initial": {
            "kind": initial.kind.value,
            "value": _fraction_text(initial.value),
            "extension": initial.extension.value,
        },
    }
    if initial.point is not None:
        payload["initial"]["point"] = list(initial.point)
    if initial.table:
        payload["initial"]["table"] = [
            {"n": list(k), "value": _fraction_text(v)}
            for k, v in sorted(initial.table.items())
        ]
    return json.dumps(payload)
