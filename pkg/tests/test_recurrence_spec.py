import json
from fractions import Fraction

import pytest

from walks.recurrence import (
    Extension, InitialCondition, RecurrenceSpec, load_spec, parse_spec,
    rec2_spec, spec_to_json
)
from walks.shared.errors import DomainError, ParseError

FIBONACCI = json.dumps({
    "d": 1,
    "shifts": [{"h": [-1]}, {"h": [-2], "c": "1"}],
    "start": [2],
    "initial": {"kind": "table", "value": "0",
                "table": [{"n": [1], "value": "1"}]},
})


def test_parse_defaults():
    spec = parse_spec('{"d": 2, "shifts": [{"h": [1, -2]}, {"h": [-2, 1]}],'
                      ' "start": [2, 2]}')
    assert spec == rec2_spec()
    assert spec.initial.extension is Extension.ZERO


def test_parse_table_and_rationals():
    spec = parse_spec(FIBONACCI)
    assert spec.shifts == {(-1,): 1, (-2,): 1}
    assert spec.initial((1,)) == 1
    assert spec.initial((0,)) == 0
    half = parse_spec('{"d": 1, "shifts": [{"h": [-1], "c": "1/2"}], '
                      '"start": [1]}')
    assert half.shifts[(-1,)] == Fraction(1, 2)


def test_load_from_file(tmp_path):
    path = tmp_path / "fib.json"
    path.write_text(FIBONACCI)
    assert load_spec(str(path)) == parse_spec(FIBONACCI)
    with pytest.raises(DomainError):
        load_spec(str(tmp_path / "missing.json"))


@pytest.mark.parametrize("spec", [
    rec2_spec(),
    RecurrenceSpec(1, {(-1,): Fraction(-3, 4)}, (1,),
                   InitialCondition.indicator((0,), 5, Extension.STRICT)),
    RecurrenceSpec(2, {(-1, 0): 1, (0, -1): 2}, (1, 1),
                   InitialCondition.lookup({(0, 0): 1, (3, 0): 2}, 7)),
])
def test_json_round_trip(spec):
    assert parse_spec(spec_to_json(spec)) == spec


def test_initial_conditions():
    point = InitialCondition.indicator((1, 2), value=3)
    assert point((1, 2)) == 3
    assert point((2, 1)) == 0
    assert point((-1, 2)) == 0
    strict = InitialCondition.constant(1, Extension.STRICT)
    assert strict((0, 0)) == 1
    with pytest.raises(DomainError):
        strict((-1, 0))


def test_recursive_points():
    spec = rec2_spec()
    assert spec.is_recursive_point((2, 2))
    assert not spec.is_recursive_point((1, 5))


@pytest.mark.parametrize("d,shifts,start,field", [
    (0, {(): 1}, (), "d"),
    (1, {}, (1,), "shifts"),
    (2, {(1,): 1}, (1, 1), "shifts"),
    (1, {(-1,): 0}, (1,), "shifts"),
    (1, {(-1,): 1}, (1, 1), "start"),
    (1, {(-2,): 1}, (1,), "start"),
])
def test_invalid_specs(d, shifts, start, field):
    with pytest.raises(DomainError) as excinfo:
        RecurrenceSpec(d, shifts, start, InitialCondition.constant())
    assert excinfo.value.field == field


@pytest.mark.parametrize("text", [
    "not json",
    '{"d": 1, "shifts": [{"h": [-1], "c": "x"}], "start": [1]}',
    '{"d": 1, "shifts": [{"h": [-1]}, {"h": [-1]}], "start": [1]}',
    '{"d": 1, "shifts": [{"h": [-1]}], "start": [1], '
    '"initial": {"kind": "point"}}',
    '{"d": 1, "shifts": [{"h": [-1]}], "start": [1], '
    '"initial": {"extension": "loose"}}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_spec(text)
