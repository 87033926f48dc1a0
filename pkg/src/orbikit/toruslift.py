"""Linear torus lifts, deck rotations and the exact growth-rate certificate.

Everything counted here is a Python int, so iterates of A never overflow;
floats appear only when the final exponent is compared against log|d|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .covergraph.cases import TORUS_TAGS, get_case
from .errors import AssertionFailure, DegenerateIterate, NotTorusCase, OrbikitError


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def parse(cls, text: str) -> "IntMatrix2":
        """Row-major ``"a,b,c,d"``."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 4:
            raise ValueError(f"a 2x2 matrix needs 4 comma-separated entries, got {text!r}")
        return cls(*(int(p) for p in parts))

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def rows(cls, rows) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def to_rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, o: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "IntMatrix2":
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k: int) -> "IntMatrix2":
        return IntMatrix2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __pow__(self, n: int) -> "IntMatrix2":
        if n < 0:
            raise ValueError("negative powers are not defined over the integers")
        result, base = IntMatrix2.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, x, y):
        return self.a * x + self.b * y, self.c * x + self.d * y

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


I2 = IntMatrix2.identity()


@dataclass(frozen=True)
class DeckRotation:
    case: str
    order: int
    matrix: IntMatrix2
    label: str


# lattice bases: square {1, i}; hexagonal {1, e^{i pi/3}}.  Columns are the
# images of the basis vectors under the rotation.
_DECK = {
    "2222": (2, IntMatrix2(-1, 0, 0, -1), "T(z) = -z"),
    "244": (4, IntMatrix2(0, -1, 1, 0), "T(z) = iz"),
    "236": (6, IntMatrix2(0, -1, 1, 1), "T(z) = e^{iπ/3} z"),
    "333": (3, IntMatrix2(-1, -1, 1, 0), "T(z) = e^{2iπ/3} z"),
}


def deck_matrix(case) -> DeckRotation:
    tag = case if case == "ii" else get_case(case).tag
    if tag not in _DECK:
        raise NotTorusCase(f"case {tag} does not lift to a torus")
    order, matrix, label = _DECK[tag]
    return DeckRotation(tag, order, matrix, label)


def lattice_multiplication(case, x: int, y: int) -> IntMatrix2:
    """Multiplication by x + y*tau on the case's lattice, tau = i or e^{i pi/3}.

    These matrices commute with the deck rotation, so they are the linear
    models of lifts of Lattès-type maps.
    """
    tag = deck_matrix(case).case
    tau = IntMatrix2(0, -1, 1, 0) if tag in ("2222", "244") else IntMatrix2(0, -1, 1, 1)
    return I2.scale(x) + tau.scale(y)


@dataclass(frozen=True)
class TorusLift:
    A: IntMatrix2
    case: str
    d: int | None = None
    sheets: int = field(init=False)
    rotation: DeckRotation = field(init=False)

    def __post_init__(self):
        rot = deck_matrix(self.case)
        object.__setattr__(self, "case", rot.case)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "sheets", get_case(rot.case).sheets)
        if self.d is None:
            object.__setattr__(self, "d", self.A.det)
        if self.A.det != self.d:
            raise OrbikitError(f"det A = {self.A.det} does not match the degree d = {self.d}")
        if abs(self.d) <= 1:
            raise OrbikitError(f"the degree must satisfy |d| > 1, got {self.d}")


def avoid_eigenvalue_one(A: IntMatrix2, R: DeckRotation | IntMatrix2) -> IntMatrix2:
    """A itself when 1 is not an eigenvalue, otherwise R.A.

    R.A is the action of the other lift phi.F of the same sphere map.  Only
    one composition is tried.
    """
    Rm = R.matrix if isinstance(R, DeckRotation) else R
    if (A - I2).det != 0:
        return A
    RA = Rm @ A
    if (RA - I2).det == 0:
        raise AssertionFailure(
            f"both A = {A} and R.A = {RA} have eigenvalue 1 "
            f"(|det A| = {abs(A.det)}; A must descend through the deck group with |det A| > 1)"
        )
    return RA


def fixed_count_torus(A: IntMatrix2, n: int) -> int:
    """|det(A^n - I)|: the Lefschetz number of A^n, here an exact count."""
    if n < 1:
        raise ValueError("n must be positive")
    value = (A**n - I2).det
    if value == 0:
        raise DegenerateIterate(n)
    return abs(value)


def sphere_lower_bound(lift: TorusLift, n: int) -> int:
    A1 = avoid_eigenvalue_one(lift.A, lift.rotation)
    count = fixed_count_torus(A1, n)
    return -(-count // lift.sheets)


@dataclass(frozen=True)
class CertificateRow:
    n: int
    torus_count: int
    sphere_bound: int
    exponent: float


@dataclass(frozen=True)
class RateCertificate:
    case: str
    A: IntMatrix2
    certified_matrix: IntMatrix2
    rotation_applied: bool
    d: int
    sheets: int
    horizon: int
    eps: float
    rows: tuple[CertificateRow, ...]
    target: float
    passed: bool

    @property
    def final_exponent(self) -> float:
        return self.rows[-1].exponent

    @property
    def margin(self) -> float:
        return self.final_exponent - (self.target - self.eps)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "matrix": self.A.to_rows(),
            "certified_matrix": self.certified_matrix.to_rows(),
            "rotation_applied": self.rotation_applied,
            "degree": self.d,
            "sheets": self.sheets,
            "horizon": self.horizon,
            "eps": self.eps,
            "target": self.target,
            "final_exponent": self.final_exponent,
            "verdict": "pass" if self.passed else "fail",
            # counts can exceed JSON-safe integers, so they travel as strings
            "rows": [
                {
                    "n": r.n,
                    "torus_count": str(r.torus_count),
                    "sphere_bound": str(r.sphere_bound),
                    "exponent": r.exponent,
                }
                for r in self.rows
            ],
        }

    def to_text(self) -> str:
        used = f"R.A = {self.certified_matrix}" if self.rotation_applied else f"A = {self.A}"
        head = [
            f"case {get_case(self.case).label}  A = {self.A}  d = {self.d}  sheets = {self.sheets}",
            f"certified lift: {used}",
        ]
        width_t = max(len("torus_count"), *(len(str(r.torus_count)) for r in self.rows))
        width_s = max(len("sphere_bound"), *(len(str(r.sphere_bound)) for r in self.rows))
        lines = [f"{'n':>4}  {'torus_count':>{width_t}}  {'sphere_bound':>{width_s}}  {'(1/n)ln bound':>14}"]
        for r in self.rows:
            lines.append(f"{r.n:>4}  {r.torus_count:>{width_t}}  {r.sphere_bound:>{width_s}}  {r.exponent:>14.6f}")
        verdict = "PASS" if self.passed else "FAIL"
        tail = (
            f"{verdict}: (1/{self.horizon}) ln bound = {self.final_exponent:.6f} "
            f"vs ln|d| - eps = {self.target - self.eps:.6f} (margin {self.margin:+.6f})"
        )
        return "\n".join(head + lines + [tail])


def certify_rate(lift: TorusLift, N: int = 20, eps: float = 0.05) -> RateCertificate:
    if N < 1:
        raise ValueError("the horizon N must be >= 1")
    A1 = avoid_eigenvalue_one(lift.A, lift.rotation)
    rows = []
    for n in range(1, N + 1):
        count = fixed_count_torus(A1, n)
        bound = -(-count // lift.sheets)
        rows.append(CertificateRow(n, count, bound, math.log(bound) / n))
    target = math.log(abs(lift.d))
    passed = rows[-1].exponent >= target - eps
    return RateCertificate(
        case=lift.case,
        A=lift.A,
        certified_matrix=A1,
        rotation_applied=A1 != lift.A,
        d=lift.d,
        sheets=lift.sheets,
        horizon=N,
        eps=eps,
        rows=tuple(rows),
        target=target,
        passed=passed,
    )


def descends_check(A: IntMatrix2, R: DeckRotation) -> bool:
    """Whether A.R = R^s.A for some s, i.e. A normalises the deck group."""
    AR = A @ R.matrix
    return any(R.matrix**s @ A == AR for s in range(R.order))


__all__ = [
    "TORUS_TAGS",
    "CertificateRow",
    "DeckRotation",
    "IntMatrix2",
    "RateCertificate",
    "TorusLift",
    "avoid_eigenvalue_one",
    "certify_rate",
    "deck_matrix",
    "descends_check",
    "fixed_count_torus",
    "lattice_multiplication",
    "sphere_lower_bound",
]
