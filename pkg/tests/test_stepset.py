import pytest

from walks.shared.errors import DomainError, ParseError
from walks.stepset import (
    DEFAULT_LEGEND, DIAGONAL, KNIGHT, KREWERAS, SQUARE, StepSet, Verdict,
    has_small_height_variation, holonomy_criterion, is_x_symmetric,
    name_steps, parse_legend, parse_named_steps, resolve_step_set
)


@pytest.mark.parametrize("steps, symmetric, small, verdict", [
    (SQUARE, True, True, Verdict.GUARANTEED_D_FINITE),
    (DIAGONAL, True, True, Verdict.GUARANTEED_D_FINITE),
    (KNIGHT, False, False, Verdict.UNKNOWN),
    (KREWERAS, False, True, Verdict.UNKNOWN),
    (StepSet.of([(0, 2), (0, -2), (1, 0)]), True, False, Verdict.UNKNOWN),
])
def test_criterion(steps, symmetric, small, verdict):
    assert is_x_symmetric(steps) is symmetric
    assert has_small_height_variation(steps) is small
    assert holonomy_criterion(steps) is verdict


def test_max_step_and_sorting():
    s = StepSet.of([(-1, 2), (2, -1)])
    assert s.steps == ((-1, 2), (2, -1))
    assert s.max_step == 2
    assert s == KNIGHT


def test_empty_and_duplicate_steps_are_rejected():
    with pytest.raises(DomainError):
        StepSet.of([])
    with pytest.raises(DomainError):
        StepSet.of([(1, 0), (1, 0)])


def test_compact_and_json_forms_agree():
    compact = StepSet.from_text("(0,1);(1,0);(0,-1);(-1,0)")
    js = StepSet.from_json("[[0, 1], [1, 0], [0, -1], [-1, 0]]")
    assert compact == js == SQUARE
    assert StepSet.parse(SQUARE.to_text()) == SQUARE
    assert StepSet.parse(SQUARE.to_json()) == SQUARE


@pytest.mark.parametrize("text", [
    "(0,1);(1,0", "(a,1)", "0,1", "[[0, 1], [1]]", "[[0, true]]", "[1, 2",
])
def test_malformed_step_sets(text):
    with pytest.raises(ParseError) as excinfo:
        StepSet.parse(text)
    assert excinfo.value.field == "steps"


def test_resolve_presets_by_name():
    assert resolve_step_set("knight") == KNIGHT
    assert resolve_step_set(" Kreweras ") == KREWERAS
    assert resolve_step_set("(2,-1);(-1,2)") == KNIGHT


def test_legend_round_trip():
    legend = parse_legend("A=(2,-1);B=(-1,2)")
    assert legend == {'A': (2, -1), 'B': (-1, 2)}
    steps = parse_named_steps("A,B,A", legend)
    assert steps == [(2, -1), (-1, 2), (2, -1)]
    assert name_steps(steps, legend) == ['A', 'B', 'A']
    assert name_steps([(3, 3)], legend) == ['(3,3)']


def test_default_legend_and_unknown_names():
    assert parse_named_steps("N, E ,SW", DEFAULT_LEGEND) == [
        (0, 1), (1, 0), (-1, -1)
    ]
    with pytest.raises(ParseError):
        parse_named_steps("N,X", DEFAULT_LEGEND)
    with pytest.raises(ParseError):
        parse_legend("A:(1,0)")
