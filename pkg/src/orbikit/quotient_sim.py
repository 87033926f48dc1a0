"""Brute-force fixed points of f^n on the quotient sphere of a linear torus model.

A torus point projects to a fixed point of f^n exactly when A^n x = R^j x
(mod Z^2) for some power j of the deck rotation.  We enumerate those
solutions with a Smith normal form and count deck orbits.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import AllSingular, EnumerationCapExceeded, SingularMatrix
from .toruslift import DeckRotation, IntMatrix2, TorusLift, sphere_lower_bound

DEFAULT_MAX_ENUM = 10**6


def max_enumeration() -> int:
    raw = os.environ.get("ORBIKIT_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


@dataclass(frozen=True)
class TorusPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x) % 1)
        object.__setattr__(self, "y", Fraction(self.y) % 1)


def smith_normal_form(M: IntMatrix2) -> tuple[IntMatrix2, IntMatrix2, IntMatrix2]:
    """Return (U, D, V) with U.M.V = D = diag(d1, d2), d1 | d2, both >= 0, U and V unimodular."""
    m = [[M.a, M.b], [M.c, M.d]]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def swap_rows():
        m.reverse()
        U.reverse()

    def swap_cols():
        for row in m + V:
            row.reverse()

    def add_row(src, dst, k):  # row dst += k * row src
        for mat in (m, U):
            mat[dst] = [a + k * b for a, b in zip(mat[dst], mat[src])]

    def add_col(src, dst, k):
        for mat in (m, V):
            for row in mat:
                row[dst] += k * row[src]

    while True:
        entries = [(abs(m[i][j]), i, j) for i in range(2) for j in range(2) if m[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        if i:
            swap_rows()
        if j:
            swap_cols()
        p = m[0][0]
        add_row(0, 1, -(m[1][0] // p))
        add_col(0, 1, -(m[0][1] // p))
        if m[1][0] or m[0][1]:
            continue
        if m[1][1] % p:
            add_row(1, 0, 1)
            continue
        break

    for i in range(2):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            U[i] = [-x for x in U[i]]
    return IntMatrix2.rows(U), IntMatrix2.rows(m), IntMatrix2.rows(V)


def _solutions_mod(M: IntMatrix2, L: int | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Solutions of M x = 0 mod Z^2 as integer numerators over a denominator.

    The denominator is the larger elementary divisor unless ``L`` (a multiple
    of it) is given.
    """
    if M.det == 0:
        raise SingularMatrix(f"det {M} = 0: the solution set is not finite")
    _, D, V = smith_normal_form(M)
    d1, d2 = D.a, D.d
    L = d2 if L is None else L
    s1, s2 = L // d1, L // d2
    points = []
    for i in range(d1):
        for j in range(d2):
            u, v = V.apply(i * s1, j * s2)
            points.append((u % L, v % L))
    return L, points


def smith_solve(M: IntMatrix2) -> list[TorusPoint]:
    L, points = _solutions_mod(M)
    return [TorusPoint(Fraction(u, L), Fraction(v, L)) for u, v in points]


@dataclass(frozen=True)
class QuotientFixReport:
    n: int
    per_j: tuple[tuple[int, int | None], ...]
    singular_j: tuple[int, ...]
    total_solutions: int
    orbit_count: int
    substitution_ok: bool
    deck_closed: bool
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "per_j": [{"j": j, "solutions": c} for j, c in self.per_j],
            "singular_j": list(self.singular_j),
            "total_solutions": self.total_solutions,
            "orbit_count": self.orbit_count,
            "substitution_ok": self.substitution_ok,
            "deck_closed": self.deck_closed,
            "warnings": list(self.warnings),
        }


def count_quotient_fixed(A: IntMatrix2, R: DeckRotation, n: int, max_points: int | None = None) -> QuotientFixReport:
    cap = max_enumeration() if max_points is None else max_points
    An = A**n
    Rm = R.matrix
    powers = [Rm**j for j in range(R.order)]
    systems = []
    per_j = []
    singular = []
    for j, Rj in enumerate(powers):
        M = An - Rj
        det = abs(M.det)
        if det == 0:
            singular.append(j)
            per_j.append((j, None))
        else:
            systems.append((j, M))
            per_j.append((j, det))
    if not systems:
        raise AllSingular(f"every det(A^{n} - R^j) vanishes")
    largest = max(abs(M.det) for _, M in systems)
    if largest > cap:
        raise EnumerationCapExceeded(
            f"n={n} needs {largest} torus points for one deck twist, above the enumeration cap {cap} "
            f"(set ORBIKIT_MAX_ENUM to raise it)"
        )

    L = math.lcm(*(smith_normal_form(M)[1].d for _, M in systems))
    union: set[tuple[int, int]] = set()
    substitution_ok = True
    for j, M in systems:
        _, pts = _solutions_mod(M, L)
        for u, v in pts:
            p, q = M.apply(u, v)
            if p % L or q % L:
                substitution_ok = False
            union.add((u, v))

    def rotate(pt):
        u, v = Rm.apply(*pt)
        return u % L, v % L

    deck_closed = all(rotate(pt) in union for pt in union)
    reps = set()
    for pt in union:
        orbit = [pt]
        for _ in range(R.order - 1):
            orbit.append(rotate(orbit[-1]))
        reps.add(min(orbit))

    warnings = tuple(f"j={j}: det(A^{n} - R^{j}) = 0, excluded" for j in singular)
    if not deck_closed:
        warnings += ("solution set is not closed under the deck rotation (A does not descend)",)
    return QuotientFixReport(
        n=n,
        per_j=tuple(per_j),
        singular_j=tuple(singular),
        total_solutions=len(union),
        orbit_count=len(reps),
        substitution_ok=substitution_ok,
        deck_closed=deck_closed,
        warnings=warnings,
    )


@dataclass(frozen=True)
class OracleRow:
    n: int
    exact: int
    bound: int
    dominates: bool
    exact_exponent: float
    bound_exponent: float
    report: QuotientFixReport


def oracle_vs_bound(lift: TorusLift, N: int, max_points: int | None = None) -> list[OracleRow]:
    rows = []
    for n in range(1, N + 1):
        report = count_quotient_fixed(lift.A, lift.rotation, n, max_points)
        bound = sphere_lower_bound(lift, n)
        exact = report.orbit_count
        rows.append(
            OracleRow(
                n=n,
                exact=exact,
                bound=bound,
                dominates=exact >= bound,
                exact_exponent=math.log(exact) / n,
                bound_exponent=math.log(bound) / n,
                report=report,
            )
        )
    return rows


def oracle_table_json(lift: TorusLift, rows: list[OracleRow]) -> dict:
    return {
        "case": lift.case,
        "matrix": lift.A.to_rows(),
        "degree": lift.d,
        "sheets": lift.sheets,
        "all_dominate": all(r.dominates for r in rows),
        "rows": [
            {
                "n": r.n,
                "exact": r.exact,
                "bound": r.bound,
                "dominates": r.dominates,
                "exact_exponent": r.exact_exponent,
                "bound_exponent": r.bound_exponent,
                "substitution_ok": r.report.substitution_ok,
                "singular_j": list(r.report.singular_j),
            }
            for r in rows
        ],
    }


def oracle_table_text(lift: TorusLift, rows: list[OracleRow]) -> str:
    lines = [
        f"case {lift.case}  A = {lift.A}  d = {lift.d}  sheets = {lift.sheets}",
        f"{'n':>3}  {'exact N_n':>10}  {'bound':>10}  {'ok':>3}  {'ln exact/n':>10}  {'ln bound/n':>10}",
    ]
    for r in rows:
        lines.append(
            f"{r.n:>3}  {r.exact:>10}  {r.bound:>10}  {'yes' if r.dominates else 'NO':>3}  "
            f"{r.exact_exponent:>10.4f}  {r.bound_exponent:>10.4f}"
        )
        for w in r.report.warnings:
            lines.append(f"     note: {w}")
    return "\n".join(lines)
