import json

import pytest
from hypothesis import given, settings

from orbikit.errors import (
    DanglingImage,
    FiberOverflow,
    NotForwardClosed,
    PortraitError,
    RiemannHurwitzViolation,
    UnknownPoint,
)
from orbikit.portrait import (
    is_totally_invariant,
    load_portrait,
    make_portrait,
    portrait_from_dict,
    postcritical_set,
    validate_portrait,
)

from strategies import portraits


def test_z2_postcritical_set(load):
    assert postcritical_set(load("z2")) == {"p", "q"}


def test_z2m2_postcritical_set(load):
    assert postcritical_set(load("z2m2")) == {"m2", "p2", "cinf"}


def test_rh_violation():
    with pytest.raises(RiemannHurwitzViolation):
        make_portrait(2, [("p", 2, "p"), ("q", 1, "q")])


def test_dangling_image_is_not_forward_closed():
    with pytest.raises(NotForwardClosed):
        make_portrait(2, [("p", 2, "p"), ("q", 2, "r")])
    assert issubclass(DanglingImage, NotForwardClosed)


def test_fiber_overflow():
    with pytest.raises(FiberOverflow):
        make_portrait(2, [("p", 2, "p"), ("q", 2, "p")])


def test_local_degree_range():
    with pytest.raises(PortraitError):
        make_portrait(2, [("p", 3, "p"), ("q", 1, "q")])


def test_degree_one_rejected():
    with pytest.raises(PortraitError):
        make_portrait(1, [("p", 1, "p")])


def test_duplicate_ids():
    with pytest.raises(PortraitError):
        make_portrait(2, [("p", 2, "p"), ("p", 2, "p")])


def test_unknown_fields_rejected():
    with pytest.raises(PortraitError):
        portrait_from_dict({"degree": 2, "points": [], "name": "z2"})
    with pytest.raises(PortraitError):
        portrait_from_dict({"degree": 2, "points": [{"id": "p", "deg": 2, "image": "p", "x": 0}]})
    with pytest.raises(PortraitError):
        portrait_from_dict({"degree": 2})


def test_json_roundtrip(load, tmp_path):
    p = load("lattes236")
    path = tmp_path / "p.json"
    path.write_text(json.dumps(p.to_dict()))
    assert load_portrait(path) == p


def test_total_invariance_examples(load):
    assert is_totally_invariant(load("z2"), {"p", "q"})
    assert is_totally_invariant(load("z2m2"), {"cinf"})
    # 2 has the unlisted regular preimage -2... here listed as m2
    assert not is_totally_invariant(load("z2m2"), {"p2"})
    with pytest.raises(UnknownPoint):
        is_totally_invariant(load("z2"), {"nowhere"})


def test_unlisted_preimage_breaks_invariance():
    # q is fixed with degree 1, so its other preimage is unlisted
    p = make_portrait(2, [("c", 2, "c"), ("e", 2, "e"), ("q", 1, "q")])
    assert not is_totally_invariant(p, {"q"})


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_riemann_hurwitz_holds(p):
    assert sum(x.local_degree - 1 for x in p.points) == 2 * p.degree - 2


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_postcritical_forward_invariant(p):
    post = postcritical_set(p)
    assert all(p.image(x) in post for x in post)


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_total_invariance_of_image(p):
    crit = set(p.critical_points())
    if is_totally_invariant(p, crit):
        image = {p.image(x) for x in crit}
        if image == crit:
            assert is_totally_invariant(p, image)


@settings(max_examples=200, deadline=None)
@given(portraits())
def test_validation_is_idempotent(p):
    assert validate_portrait(p) is p
