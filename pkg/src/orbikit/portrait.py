"""Finite critical portraits of branched self-covers of the sphere.

A portrait lists a forward-closed set of marked points together with their
local degrees and images.  Points that are not listed are implicitly regular
and lie off the postcritical set, so fiber sums only need to stay below the
global degree.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    DanglingImage,
    FiberOverflow,
    NotForwardClosed,
    PortraitError,
    RiemannHurwitzViolation,
    UnknownPoint,
)


@dataclass(frozen=True)
class MarkedPoint:
    id: str
    local_degree: int
    image: str


@dataclass(frozen=True)
class CriticalPortrait:
    degree: int
    points: tuple[MarkedPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def ids(self) -> list[str]:
        return [p.id for p in self.points]

    def point(self, pid: str) -> MarkedPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise UnknownPoint(pid)

    def image(self, pid: str) -> str:
        return self.point(pid).image

    def local_degree(self, pid: str) -> int:
        return self.point(pid).local_degree

    def critical_points(self) -> list[str]:
        return [p.id for p in self.points if p.local_degree > 1]

    def preimages(self, pid: str) -> list[MarkedPoint]:
        """Listed preimages of ``pid``; unlisted ones are regular and off P_f."""
        return [p for p in self.points if p.image == pid]

    def fiber_sum(self, pid: str) -> int:
        return sum(p.local_degree for p in self.preimages(pid))

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "points": [{"id": p.id, "deg": p.local_degree, "image": p.image} for p in self.points],
        }


_POINT_FIELDS = {"id", "deg", "image"}
_PORTRAIT_FIELDS = {"degree", "points"}


def portrait_from_dict(raw: Mapping) -> CriticalPortrait:
    """Build a portrait from the JSON schema; unknown fields are rejected.

    Only the shape is checked here, see :func:`validate_portrait` for the
    branching invariants.
    """
    if not isinstance(raw, Mapping):
        raise PortraitError("portrait must be a JSON object")
    extra = set(raw) - _PORTRAIT_FIELDS
    if extra:
        raise PortraitError(f"unknown portrait fields: {sorted(extra)}")
    missing = _PORTRAIT_FIELDS - set(raw)
    if missing:
        raise PortraitError(f"missing portrait fields: {sorted(missing)}")
    degree = raw["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise PortraitError("degree must be an integer")
    points = []
    for entry in raw["points"]:
        if not isinstance(entry, Mapping):
            raise PortraitError("each point must be a JSON object")
        extra = set(entry) - _POINT_FIELDS
        if extra:
            raise PortraitError(f"unknown point fields: {sorted(extra)}")
        missing = _POINT_FIELDS - set(entry)
        if missing:
            raise PortraitError(f"missing point fields: {sorted(missing)}")
        deg = entry["deg"]
        if not isinstance(deg, int) or isinstance(deg, bool):
            raise PortraitError(f"deg of {entry['id']!r} must be an integer")
        points.append(MarkedPoint(str(entry["id"]), deg, str(entry["image"])))
    return CriticalPortrait(degree, tuple(points))


def load_portrait(path: str | Path) -> CriticalPortrait:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return validate_portrait(portrait_from_dict(raw))


def make_portrait(degree: int, points: Iterable[tuple[str, int, str]]) -> CriticalPortrait:
    """Shorthand used by tests: ``make_portrait(2, [("p", 2, "p"), ("q", 2, "q")])``."""
    return validate_portrait(CriticalPortrait(degree, tuple(MarkedPoint(*p) for p in points)))


def validate_portrait(portrait: CriticalPortrait) -> CriticalPortrait:
    d = portrait.degree
    if d < 2:
        raise PortraitError(f"degree must be >= 2 (orientation-preserving), got {d}")
    ids = portrait.ids
    if len(set(ids)) != len(ids):
        raise PortraitError("duplicate point identifiers")
    if not ids:
        raise NotForwardClosed("portrait lists no points")

    known = set(ids)
    for p in portrait.points:
        if not 1 <= p.local_degree <= d:
            raise PortraitError(f"local degree of {p.id!r} must lie in [1, {d}], got {p.local_degree}")
        if p.image not in known:
            raise DanglingImage(f"image {p.image!r} of {p.id!r} is not listed")

    branching = sum(p.local_degree - 1 for p in portrait.points if p.local_degree > 1)
    if branching != 2 * d - 2:
        raise RiemannHurwitzViolation(
            f"sum of (deg - 1) over critical points is {branching}, expected 2d-2 = {2 * d - 2}"
        )

    sums: dict[str, int] = defaultdict(int)
    for p in portrait.points:
        sums[p.image] += p.local_degree
    for y, total in sums.items():
        if total > d:
            raise FiberOverflow(f"fiber over {y!r} has degree sum {total} > {d}")
    return portrait


def postcritical_set(portrait: CriticalPortrait) -> set[str]:
    result: set[str] = set()
    for c in portrait.critical_points():
        x = portrait.image(c)
        while x not in result:
            result.add(x)
            x = portrait.image(x)
    return result


def is_totally_invariant(portrait: CriticalPortrait, subset: Iterable[str]) -> bool:
    subset = set(subset)
    known = set(portrait.ids)
    for pid in subset - known:
        raise UnknownPoint(pid)
    d = portrait.degree
    for p in portrait.points:
        if p.id in subset and p.image not in subset:
            return False
        if p.id not in subset and p.image in subset:
            return False
    # fibers inside the subset must be full, otherwise an unlisted regular
    # preimage sits outside it
    return all(portrait.fiber_sum(y) == d for y in subset)
