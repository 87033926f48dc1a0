"""Homology-level lifting criterion for f.pi restricted to the punctured cover.

f_# sends each Y-generator to an integer vector on the X-generators.  The
lift exists iff f_*(H) lies in G, and since G is the kernel of the case's
congruence this is decided by pushing every H-generator through f_#.
"""

from __future__ import annotations

import re
from typing import Mapping

from ..errors import IllegalAssignment
from .cases import SignatureCase, congruence_member, get_case, subgroup_H
from .words import generator_of, is_inverse

Vector = tuple[int, ...]


def _scale(k: int, v: Vector) -> Vector:
    return tuple(k * x for x in v)


def allowed_regular_images(case, ygen: str) -> set[Vector]:
    """Images of the loop around a postcritical point of weight w.

    The point maps to some puncture t with w | nu(t), with local degree
    nu(t) / w.
    """
    case = get_case(case)
    weight = case.y_weights[ygen]
    out = {
        _scale(nu // weight, cls)
        for cls, nu in case.punctures.values()
        if nu % weight == 0
    }
    if case.signed_regular_images:
        out |= {_scale(-1, v) for v in out}
    return out


def puncture_image(case, target: str) -> Vector:
    """Image of the loop around a critical preimage mapping to ``target``."""
    case = get_case(case)
    if target not in case.punctures:
        raise IllegalAssignment(
            f"{target!r} is not a puncture of X for case {case.label}; "
            f"expected one of {sorted(case.punctures)}"
        )
    cls, nu = case.punctures[target]
    return _scale(nu, cls)


def allowed_puncture_images(case) -> set[Vector]:
    case = get_case(case)
    return {puncture_image(case, t) for t in case.punctures}


def _puncture_index(name: str) -> int:
    m = re.fullmatch(r"g(\d+)", name)
    if m is None or int(m.group(1)) < 1:
        raise IllegalAssignment(f"puncture generators are g1, g2, ...; got {name!r}")
    return int(m.group(1))


def induced_images(case, assignment: Mapping[str, Vector], puncture_images: Mapping[str, str]) -> dict[str, Vector]:
    """Full f_# on Y-generators, validated against the case's legal images."""
    case = get_case(case)
    images: dict[str, Vector] = {}
    for ygen in case.x_generators:
        if ygen not in assignment:
            raise IllegalAssignment(f"no image given for Y-generator {ygen!r}")
        vec = tuple(int(x) for x in assignment[ygen])
        if vec not in allowed_regular_images(case, ygen):
            raise IllegalAssignment(
                f"{ygen} -> {vec} is not a legal image in case {case.label}; "
                f"allowed {sorted(allowed_regular_images(case, ygen))}"
            )
        images[ygen] = vec
    extra = set(assignment) - set(case.x_generators)
    if extra:
        raise IllegalAssignment(f"unknown Y-generators in assignment: {sorted(extra)}")
    indices = sorted(_puncture_index(g) for g in puncture_images)
    if indices != list(range(1, len(indices) + 1)):
        raise IllegalAssignment("puncture generators must be numbered g1..gn without gaps")
    for g, target in puncture_images.items():
        images[g] = puncture_image(case, target)
    return images


def push_forward(case: SignatureCase, images: Mapping[str, Vector], word) -> Vector:
    vec = [0] * case.rank
    for x in word.letters:
        img = images[generator_of(x)]
        sign = -1 if is_inverse(x) else 1
        for i, c in enumerate(img):
            vec[i] += sign * c
    return tuple(vec)


def lift_criterion(case, images: Mapping[str, Vector]) -> bool:
    """f_*(H) within G for arbitrary (possibly illegal) generator images."""
    case = get_case(case)
    n_extra = sum(1 for g in images if g not in case.x_generators)
    return all(
        congruence_member(case, push_forward(case, images, h))
        for h in subgroup_H(case, n_extra)
    )


def lift_check(case, assignment: Mapping[str, Vector], puncture_images: Mapping[str, str]) -> bool:
    images = induced_images(case, assignment, puncture_images)
    return lift_criterion(case, images)
