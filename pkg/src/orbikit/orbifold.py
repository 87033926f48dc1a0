"""Ramification function, orbifold signature and the non-hyperbolic dichotomy."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import InternalInconsistency, NotNonHyperbolic
from .portrait import CriticalPortrait, is_totally_invariant, postcritical_set


@functools.total_ordering
class _Infinity:
    """The weight carried by points on critical cycles.

    Compares greater than every integer, absorbs multiplication by positive
    integers and is divisible only by itself.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "∞"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("orbikit.INFINITY")

    def __mul__(self, other):
        if isinstance(other, int) and other < 1:
            raise ValueError("only positive multiples of ∞ are defined")
        return self

    __rmul__ = __mul__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
Weight = Union[int, _Infinity]


def divides(a: Weight, b: Weight) -> bool:
    """``a | b`` under the convention that ∞ divides only ∞."""
    if b is INFINITY:
        return True
    if a is INFINITY:
        return False
    return b % a == 0


def _lcm(a: Weight, b: Weight) -> Weight:
    if a is INFINITY or b is INFINITY:
        return INFINITY
    return math.lcm(a, b)


def format_weight(w: Weight) -> str:
    return str(w)


def format_signature(sig: Iterable[Weight]) -> str:
    return "(" + ",".join(str(w) for w in sig) + ")"


def parse_weight(token) -> Weight:
    if token is INFINITY:
        return INFINITY
    if isinstance(token, str) and token.strip().lower() in {"inf", "∞", "infinity", "i"}:
        return INFINITY
    value = int(token)
    if value < 1:
        raise ValueError(f"weights are positive, got {value}")
    return value


# compact tag -> signature; tags double as CLI case names
NON_HYPERBOLIC_CASES: dict[str, tuple[Weight, ...]] = {
    "ii": (INFINITY, INFINITY),
    "22i": (2, 2, INFINITY),
    "2222": (2, 2, 2, 2),
    "244": (2, 4, 4),
    "236": (2, 3, 6),
    "333": (3, 3, 3),
}
_TAG_BY_SIGNATURE = {sig: tag for tag, sig in NON_HYPERBOLIC_CASES.items()}


@dataclass(frozen=True)
class RamificationMap:
    values: Mapping[str, Weight]

    def __getitem__(self, pid: str) -> Weight:
        return self.values.get(pid, 1)

    def signature(self) -> tuple[Weight, ...]:
        return tuple(sorted(self.values.values()))


def critical_cycles(portrait: CriticalPortrait) -> list[list[str]]:
    """Cycles of the functional graph whose composed local degree exceeds 1."""
    seen: set[str] = set()
    cycles = []
    for start in portrait.ids:
        if start in seen:
            continue
        path: list[str] = []
        index: dict[str, int] = {}
        x = start
        while x not in index and x not in seen:
            index[x] = len(path)
            path.append(x)
            x = portrait.image(x)
        if x in index:
            cycle = path[index[x]:]
            if math.prod(portrait.local_degree(c) for c in cycle) > 1:
                cycles.append(cycle)
        seen.update(path)
    return cycles


def ramification_function(portrait: CriticalPortrait) -> RamificationMap:
    """Minimal ν on P_f.

    Points on critical cycles get ∞ directly; the remaining weights are
    lcm-closed by Jacobi sweeps, which settle within 2|P_f| rounds.
    """
    post = postcritical_set(portrait)
    values: dict[str, Weight] = {x: 1 for x in post}
    for cycle in critical_cycles(portrait):
        for x in cycle:
            values[x] = INFINITY

    finite = [x for x in post if values[x] is not INFINITY]
    preimages = {x: portrait.preimages(x) for x in finite}
    for _ in range(2 * len(post) + 1):
        updated = {}
        for x in finite:
            acc = values[x]
            for y in preimages[x]:
                acc = _lcm(acc, values.get(y.id, 1) * y.local_degree)
            updated[x] = acc
        if all(updated[x] == values[x] for x in finite):
            return RamificationMap(dict(sorted(values.items())))
        values.update(updated)
    raise InternalInconsistency("lcm sweeps did not stabilise within 2|P_f| rounds")


def ramification_by_sweeps(portrait: CriticalPortrait) -> RamificationMap:
    """Cross-check for :func:`ramification_function` using sweeps alone.

    Weights still growing after a warm-up of 2|P_f| sweeps, watched over a
    further window of the same length, are declared infinite.
    """
    post = sorted(postcritical_set(portrait))
    preimages = {x: portrait.preimages(x) for x in post}
    values = {x: 1 for x in post}

    def sweep(vals):
        out = {}
        for x in post:
            acc = vals[x]
            for y in preimages[x]:
                acc = math.lcm(acc, vals.get(y.id, 1) * y.local_degree)
            out[x] = acc
        return out

    window = 2 * len(post)
    for _ in range(window):
        values = sweep(values)
    snapshot = dict(values)
    for _ in range(window):
        values = sweep(values)
    return RamificationMap(
        {x: (INFINITY if values[x] != snapshot[x] else values[x]) for x in post}
    )


def euler_characteristic(sig: Iterable[Weight]) -> Fraction:
    chi = Fraction(2)
    for w in sig:
        chi -= 1 if w is INFINITY else 1 - Fraction(1, w)
    return chi


@dataclass(frozen=True)
class OrbifoldClass:
    kind: str
    case: str | None
    chi: Fraction
    signature: tuple[Weight, ...]

    @property
    def non_hyperbolic(self) -> bool:
        return self.kind == "NonHyperbolic"


def classify_signature(sig: Iterable[Weight]) -> OrbifoldClass:
    sig = tuple(sorted(sig))
    chi = euler_characteristic(sig)
    if chi > 0:
        return OrbifoldClass("Spherical", None, chi, sig)
    if chi < 0:
        return OrbifoldClass("Hyperbolic", None, chi, sig)
    tag = _TAG_BY_SIGNATURE.get(sig)
    if tag is None:
        raise InternalInconsistency(f"χ = 0 for signature {format_signature(sig)} outside the six cases")
    return OrbifoldClass("NonHyperbolic", tag, chi, sig)


def classify(portrait: CriticalPortrait) -> OrbifoldClass:
    return classify_signature(ramification_function(portrait).signature())


def check_exactness(portrait: CriticalPortrait, nu: RamificationMap | None = None) -> bool:
    """deg_p · ν(p) = ν(f(p)) at every point of the sphere.

    Listed points are checked directly.  A postcritical point whose listed
    fiber is not full also has an unlisted regular preimage, where the left
    side is 1, so such a point breaks equality as well.
    """
    if nu is None:
        nu = ramification_function(portrait)
    for p in portrait.points:
        if nu[p.id] * p.local_degree != nu[p.image]:
            return False
    return all(portrait.fiber_sum(y) == portrait.degree for y in nu.values)


def detect_exceptional(portrait: CriticalPortrait) -> bool:
    crit = portrait.critical_points()
    if len(crit) != 2:
        return False
    if any(portrait.image(c) != c for c in crit):
        return False
    return is_totally_invariant(portrait, crit)


MECHANISMS = {
    "ii": "end-exchange annulus theorem",
    "22i": "annulus two-fold lift",
    "2222": "torus lift certificate (deck rotation -z, 2 sheets)",
    "244": "torus lift certificate (deck rotation iz, 4 sheets)",
    "236": "torus lift certificate (deck rotation e^{iπ/3}z, 6 sheets)",
    "333": "torus lift certificate (deck rotation e^{2iπ/3}z, 3 sheets)",
}


@dataclass(frozen=True)
class DichotomyReport:
    signature: tuple[Weight, ...]
    chi: Fraction
    kind: str
    case: str | None
    verdict: str
    mechanism: str | None

    def to_json(self) -> dict:
        return {
            "signature": [("inf" if w is INFINITY else w) for w in self.signature],
            "chi": f"{self.chi.numerator}/{self.chi.denominator}",
            "kind": self.kind,
            "case": self.case,
            "verdict": self.verdict,
            "mechanism": self.mechanism,
        }

    def to_text(self) -> str:
        verdict = f"verdict {self.verdict}"
        if self.mechanism:
            verdict += f" via {self.mechanism}"
        parts = [f"signature {format_signature(self.signature)}", self.kind, verdict]
        if self.case is not None:
            parts.append(f"case {self.case}")
        parts.append(f"chi {self.chi}")
        return "; ".join(parts)


def dichotomy_report(portrait: CriticalPortrait) -> DichotomyReport:
    cls = classify(portrait)
    if not cls.non_hyperbolic:
        raise NotNonHyperbolic(f"orbifold is {cls.kind} (χ = {cls.chi}); the dichotomy does not apply")
    if detect_exceptional(portrait):
        return DichotomyReport(cls.signature, cls.chi, cls.kind, cls.case, "EXCEPTIONAL", None)
    return DichotomyReport(
        cls.signature, cls.chi, cls.kind, cls.case, "RATE CERTIFIED", MECHANISMS[cls.case]
    )


def out_of_scope_report(portrait: CriticalPortrait) -> DichotomyReport:
    cls = classify(portrait)
    if cls.non_hyperbolic:
        return dichotomy_report(portrait)
    return DichotomyReport(cls.signature, cls.chi, cls.kind, None, "OUT_OF_SCOPE", None)
