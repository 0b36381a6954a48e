from fractions import Fraction

import pytest

from walks.recurrence import (
    GFClass, InitialCondition, Invalid, RankingWeight, RecurrenceSpec,
    apex_and_class, evaluate, from_stepset, parse_box, rec2_spec, validate
)
from walks.recurrence.spec import Extension
from walks.shared.errors import DomainError
from walks.stepset import KNIGHT, KREWERAS, SQUARE, StepSet


def make(*shifts, start=None):
    d = len(shifts[0])
    if start is None:
        start = tuple(max([0] + [-h[k] for h in shifts]) for k in range(d))
    return RecurrenceSpec(d, {h: 1 for h in shifts}, start,
                          InitialCondition.constant())


# (spec, expected minimal weight or None when invalid)
CORPUS = [
    (rec2_spec(), (1, 1)),
    (from_stepset(SQUARE, (0, 0)), (0, 0, 1)),
    (from_stepset(KNIGHT, (1, 1)), (0, 0, 1)),
    (from_stepset(KREWERAS, (0, 0)), (0, 0, 1)),
    # sum(w) = 1 is attained off the length coordinate too
    (from_stepset(StepSet.of([(1, 1)]), (0, 0)), (0, 0, 1)),
    (from_stepset(StepSet.of([(1, 1), (1, -1)]), (0, 0)), (0, 0, 1)),
    (make((-1,)), (1,)),
    (make((-1,), (-2,)), (1,)),
    (make((-1, 1), (1, -2)), (3, 2)),
    (make((1, -1), (-1, -1)), (0, 1)),
    (make((-1, 0), (0, -1)), (1, 1)),
    (make((3, -1), (-1, 1)), None),
    (make((-2, 1), (1, -2), (-1, -1)), (1, 1)),
    (make((1, 1)), None),
    (make((0, 0)), None),
    (make((1, -1), (-1, 1)), None),
    (make((-1, 2), (2, -3)), None),
    (make((2, 1), (-3, -1)), None),
    (make((1, 0), (-1, -1)), None),
    (make((0, -1), (2, -1), (-3, 2)), None),
    (make((-1, 0, 0), (0, -1, 0), (0, 0, -1)), (1, 1, 1)),
    (make((1, 1, -2), (-2, 1, 1)), (1, 0, 1)),
]


@pytest.mark.parametrize("spec,expected", CORPUS)
def test_validity_certificates(spec, expected):
    result = validate(spec)
    assert result.check(spec)
    if expected is None:
        assert isinstance(result, Invalid)
        assert all(v >= 0 for v in result.combination())
    else:
        assert isinstance(result, RankingWeight)
        assert result.w == tuple(Fraction(v) for v in expected)


def test_witness_weights():
    assert validate(make((1, 1))).witness == {(1, 1): 1}
    witness = validate(make((1, -1), (-1, 1))).witness
    assert witness == {(1, -1): Fraction(1, 2), (-1, 1): Fraction(1, 2)}


@pytest.mark.parametrize("spec,apex,gf_class", [
    (make((-1, 0), (0, -1)), (0, 0), GFClass.RATIONAL),
    (make((1, -1), (-1, -1)), (1, 0), GFClass.ALGEBRAIC),
    (rec2_spec(), (1, 1), GFClass.UNKNOWN),
    (from_stepset(KREWERAS, (0, 0)), (1, 1, 0), GFClass.UNKNOWN),
])
def test_apex_class(spec, apex, gf_class):
    assert apex_and_class(spec) == (apex, gf_class)


def test_fibonacci():
    spec = RecurrenceSpec(1, {(-1,): 1, (-2,): 1}, (2,),
                          InitialCondition.lookup({(1,): 1}))
    values = evaluate(spec, [(0, 10)])
    assert [values[(n,)] for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13,
                                                 21, 34, 55]


def test_points_outside_a_box():
    values = evaluate(rec2_spec(), [(4, 2), (2, 2)], as_box=False)
    assert values == {(4, 2): 3, (2, 2): 2}


def test_strict_initial_condition():
    spec = RecurrenceSpec(1, {(-1,): 1}, (1,),
                          InitialCondition.constant(1, Extension.STRICT))
    assert evaluate(spec, [(0, 3)])[(3,)] == 1
    with pytest.raises(DomainError):
        evaluate(spec, [(-1,)], as_box=False)


def test_evaluation_errors():
    with pytest.raises(DomainError) as excinfo:
        evaluate(make((1, 1)), [(0, 2), (0, 2)])
    assert excinfo.value.field == "shifts"
    with pytest.raises(DomainError) as excinfo:
        evaluate(rec2_spec(), [(0, 2), (0, 2)],
                 weight=RankingWeight((Fraction(1), Fraction(0))))
    assert excinfo.value.field == "weight"
    with pytest.raises(DomainError) as excinfo:
        evaluate(rec2_spec(), [(0, 2)])
    assert excinfo.value.field == "box"


def test_parse_box():
    assert parse_box("0:12, 3") == [(0, 12), (3, 3)]
    assert parse_box("-1:2") == [(-1, 2)]
    with pytest.raises(DomainError):
        parse_box("a:b")
