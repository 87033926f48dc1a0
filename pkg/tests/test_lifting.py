import random

import pytest

from orbikit.covergraph import (
    allowed_puncture_images,
    allowed_regular_images,
    get_case,
    induced_images,
    lift_check,
    lift_criterion,
)
from orbikit.errors import IllegalAssignment

CASES = ["22i", "2222", "244", "236", "333"]


def random_assignment(case, rng, n_extra):
    assignment = {y: rng.choice(sorted(allowed_regular_images(case, y))) for y in case.x_generators}
    punctures = {f"g{i}": rng.choice(sorted(case.punctures)) for i in range(1, n_extra + 1)}
    return assignment, punctures


def test_examples():
    assert lift_check("22i", {"a": (1, 0), "b": (0, 1)}, {"g1": "a"})
    assert lift_check("244", {"a": (0, 1), "b": (1, 0)}, {"g1": "c"})
    assert induced_images("244", {"a": (0, 1), "b": (1, 0)}, {"g1": "c"})["g1"] == (-2, -2)
    with pytest.raises(IllegalAssignment):
        lift_check("22i", {"a": (1, 0), "b": (0, 2)}, {})


def test_illegal_inputs():
    with pytest.raises(IllegalAssignment):
        lift_check("244", {"a": (1, 0)}, {})
    with pytest.raises(IllegalAssignment):
        lift_check("244", {"a": (1, 0), "b": (0, 1), "z": (1, 1)}, {})
    with pytest.raises(IllegalAssignment):
        lift_check("244", {"a": (1, 0), "b": (0, 1)}, {"g1": "zz"})
    with pytest.raises(IllegalAssignment):
        lift_check("244", {"a": (1, 0), "b": (0, 1)}, {"g2": "a"})


def test_allowed_images_236():
    assert allowed_regular_images("236", "a") == {(1, 0), (-3, -3)}
    assert allowed_regular_images("236", "b") == {(0, 1), (-2, -2)}
    assert allowed_puncture_images("236") == {(2, 0), (0, 3), (-6, -6)}


@pytest.mark.parametrize("tag", CASES)
def test_every_legal_assignment_lifts(tag):
    case = get_case(tag)
    rng = random.Random(tag)
    for _ in range(500):
        assignment, punctures = random_assignment(case, rng, rng.randint(0, 4))
        assert lift_check(case, assignment, punctures)


@pytest.mark.parametrize("tag", CASES)
def test_adding_punctures_is_monotone(tag):
    case = get_case(tag)
    rng = random.Random("mono" + tag)
    for _ in range(100):
        assignment, punctures = random_assignment(case, rng, 2)
        more = dict(punctures, g3=rng.choice(sorted(case.punctures)))
        if lift_check(case, assignment, punctures):
            assert lift_check(case, assignment, more)


def mutation_rate(tag, samples=500, seed=0):
    case = get_case(tag)
    rng = random.Random(f"mut-{tag}-{seed}")
    flipped = 0
    for _ in range(samples):
        assignment, punctures = random_assignment(case, rng, rng.randint(1, 4))
        images = induced_images(case, assignment, punctures)
        g = rng.choice(sorted(punctures))
        vec = list(images[g])
        vec[rng.randrange(case.rank)] += rng.choice((1, -1))
        images[g] = tuple(vec)
        flipped += not lift_criterion(case, images)
    return flipped / samples


@pytest.mark.parametrize("tag", CASES)
def test_mutation_flips_verdict(tag):
    assert mutation_rate(tag) >= 0.95
