import pytest

from walks.bijection import (
    Walk, first_passage_steps, flip_down, flip_up, flipped_indices,
    iter_walks, last_visit_steps
)
from walks.enumeration import Region, axis_hitting_counts, count_half_plane
from walks.shared.errors import BijectionError, BijectionReason, DomainError
from walks.stepset import DEFAULT_LEGEND, DIAGONAL, KNIGHT, SQUARE, StepSet

N, E, S, W = (DEFAULT_LEGEND[k] for k in "NESW")


def test_walk_basics():
    w = Walk((0, 0), (N, E, S))
    assert w.length == 3
    assert w.vertices() == [(0, 0), (0, 1), (1, 1), (1, 0)]
    assert w.ordinates() == [0, 1, 1, 0]
    assert w.end == (1, 0)
    assert w.hits_axis()
    assert w.stays_in(Region.QUADRANT)
    with pytest.raises(BijectionError) as excinfo:
        Walk((0, 0), (W,), region=Region.QUADRANT)
    assert excinfo.value.reason is BijectionReason.OUTSIDE_REGION


def test_north_north_flips_to_south_north():
    image = flip_down(Walk((0, 0), (N, N)), SQUARE)
    assert image.steps == (S, N)
    assert image.end == (0, 0)
    assert flip_up(image, SQUARE).steps == (N, N)


def test_walk_ending_on_axis_is_fixed():
    w = Walk((0, 0), (N, E, S, E))
    assert flip_down(w, SQUARE) == w
    assert flip_up(w, SQUARE) == w


def test_odd_end_goes_to_level_minus_one():
    w = Walk((0, 0), (E, N, N, S, N, N))
    image = flip_down(w, SQUARE, target_level=-1)
    assert image.end_level == -1
    assert min(image.ordinates()) == -2
    assert flip_up(image, SQUARE, target_level=-1) == w


def test_index_helpers():
    w = Walk((0, 0), (N, S, N, N, N))
    assert last_visit_steps(w, 2) == [2, 3]
    assert flipped_indices(w) == [2]
    image = flip_down(w, SQUARE, target_level=-1)
    assert first_passage_steps(image, 2) == flipped_indices(image, down=False)


@pytest.mark.parametrize("walk, steps, target, reason", [
    (Walk((0, 1), (E, N)), SQUARE, 0, BijectionReason.NEVER_HITS_AXIS),
    (Walk((0, 0), (N,)), SQUARE, 0, BijectionReason.PARITY),
    (Walk((0, 0), (N, N)), SQUARE, -1, BijectionReason.PARITY),
    (Walk((1, 1), ((2, -1),)), KNIGHT, 0, BijectionReason.ASYMMETRIC_STEPS),
    (Walk((0, 0), ((0, 2),)), StepSet.of([(0, 2), (0, -2)]), 0,
     BijectionReason.LARGE_HEIGHT_VARIATION),
    (Walk((0, 0), (S, N)), SQUARE, 0, BijectionReason.OUTSIDE_REGION),
])
def test_flip_down_preconditions(walk, steps, target, reason):
    with pytest.raises(BijectionError) as excinfo:
        flip_down(walk, steps, target)
    assert excinfo.value.reason is reason


def test_flip_up_preconditions():
    with pytest.raises(BijectionError) as excinfo:
        flip_up(Walk((0, 0), (S,)), SQUARE, 0)
    assert excinfo.value.reason is BijectionReason.WRONG_END_LEVEL
    with pytest.raises(BijectionError) as excinfo:
        flip_up(Walk((0, 0), (W, E)), SQUARE, 0)
    assert excinfo.value.reason is BijectionReason.OUTSIDE_REGION
    with pytest.raises(DomainError):
        flip_up(Walk((0, 0), (N, S)), SQUARE, 1)
    with pytest.raises(DomainError):
        flip_down(Walk((0, 0), ((1, 1), (1, -1))), SQUARE)


def test_iter_walks_counts():
    assert sum(1 for _ in iter_walks(SQUARE, (0, 0), 2, Region.QUADRANT)) == 6
    assert list(iter_walks(SQUARE, (-1, 0), 2, Region.QUADRANT)) == []
    assert [w.steps for w in iter_walks(SQUARE, (0, 0), 0,
                                        Region.QUADRANT)] == [()]


@pytest.mark.slow
@pytest.mark.parametrize("steps", [SQUARE, DIAGONAL])
@pytest.mark.parametrize("start", [(0, 0), (1, 1)])
def test_round_trip_and_image_sets(steps, start):
    for n in range(9):
        images = {0: set(), -1: set()}
        for w in iter_walks(steps, start, n, Region.QUADRANT):
            if not w.hits_axis():
                continue
            target = 0 if w.end[1] % 2 == 0 else -1
            image = flip_down(w, steps, target)
            assert image.end[1] == target
            assert image.stays_in(Region.RIGHT_HALF_PLANE)
            assert flip_up(image, steps, target) == w
            images[target].add(image.steps)
        for target in (0, -1):
            expected = {w.steps for w in iter_walks(
                steps, start, n, Region.RIGHT_HALF_PLANE)
                if w.end[1] == target}
            assert images[target] == expected


@pytest.mark.slow
@pytest.mark.parametrize("steps", [SQUARE, DIAGONAL])
@pytest.mark.parametrize("start", [(0, 0), (1, 1)])
def test_cardinalities_to_length_ten(steps, start):
    hits = axis_hitting_counts(steps, start, 10)
    half = count_half_plane(steps, start, 10)
    for n, layer in enumerate(half.layers):
        level0 = sum(c for (_, j), c in layer.items() if j == 0)
        level1 = sum(c for (_, j), c in layer.items() if j == -1)
        assert hits.even[n] == level0
        assert hits.odd[n] == level1
