"""Per-signature data for the five cases that lift to an annulus or a torus.

For each case we record the covering subgroup G of pi_1(X) = <a, b[, e]>,
the subgroup H of pi_1(Y) (Y-generators alpha, beta[, epsilon] are spelled
``a, b[, e]`` and the puncture loops ``g1, g2, ...``), and the congruence
that cuts G out of the abelianization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import RankMismatch, UnknownCase
from .folding import fold_normal
from .words import Word, abelianize


@dataclass(frozen=True)
class SignatureCase:
    tag: str
    label: str
    x_generators: tuple[str, ...]
    sheets: int
    coefficients: tuple[int, ...]
    modulus: int
    g_words: tuple[str, ...]
    h_words: tuple[str, ...]
    # gamma_i enters H through c gamma_i c^-1 for each listed conjugator c
    h_conjugators: tuple[str, ...]
    # X punctures: label -> (homology class on X, weight nu)
    punctures: dict[str, tuple[tuple[int, ...], int]] = field(hash=False)
    # weight of the postcritical point behind each alpha/beta/epsilon
    y_weights: dict[str, int] = field(hash=False)
    # alpha/beta may also go to minus a basis vector
    signed_regular_images: bool = False

    @property
    def rank(self) -> int:
        return len(self.x_generators)

    def congruence_value(self, v) -> int:
        return sum(c * x for c, x in zip(self.coefficients, v)) % self.modulus

    def congruence_text(self, v=None) -> str:
        names = "mnl"
        terms = []
        for c, name in zip(self.coefficients, names):
            terms.append(name if c == 1 else f"{c}{name}")
        form = "+".join(terms)
        if v is None:
            return f"{form}=0 mod {self.modulus}"
        return f"{form}={self.congruence_value(v)} mod {self.modulus}"


_CASES = {
    "22i": SignatureCase(
        tag="22i",
        label="(2,2,∞)",
        x_generators=("a", "b"),
        sheets=2,
        coefficients=(1, 1),
        modulus=2,
        g_words=("a2", "b2", "ab"),
        h_words=("a2", "b2", "ab"),
        h_conjugators=("", "a"),
        punctures={"a": ((1, 0), 2), "b": ((0, 1), 2)},
        y_weights={"a": 2, "b": 2},
        signed_regular_images=True,
    ),
    "2222": SignatureCase(
        tag="2222",
        label="(2,2,2,2)",
        x_generators=("a", "b", "e"),
        sheets=2,
        coefficients=(1, 1, 1),
        modulus=2,
        g_words=("a2", "b2", "e2", "ab", "be"),
        h_words=("a2", "b2", "ab", "be"),
        h_conjugators=("", "a"),
        punctures={
            "a": ((1, 0, 0), 2),
            "b": ((0, 1, 0), 2),
            "e": ((0, 0, 1), 2),
            "c": ((-1, -1, -1), 2),
        },
        y_weights={"a": 2, "b": 2, "e": 2},
    ),
    "244": SignatureCase(
        tag="244",
        label="(2,4,4)",
        x_generators=("a", "b"),
        sheets=4,
        coefficients=(1, 1),
        modulus=4,
        g_words=("a4", "b4", "abab", "a2ba", "a2b2"),
        h_words=("a4", "b4", "abab", "a2ba", "a2b2"),
        h_conjugators=("", "a", "a2", "a3"),
        punctures={"a": ((1, 0), 4), "b": ((0, 1), 4), "c": ((-1, -1), 2)},
        y_weights={"a": 4, "b": 4},
    ),
    "236": SignatureCase(
        tag="236",
        label="(2,3,6)",
        x_generators=("a", "b"),
        sheets=6,
        coefficients=(3, 2),
        modulus=6,
        g_words=("a2", "b3", "ABab", "ab3A", "BAAb", "BaBAbb", "BBaabb"),
        h_words=("a2", "b3", "ABab", "ab3A", "BAAb", "BaBAbb", "BBaabb"),
        h_conjugators=("", "a", "aB", "ab", "b", "B"),
        punctures={"a": ((1, 0), 2), "b": ((0, 1), 3), "c": ((-1, -1), 6)},
        y_weights={"a": 2, "b": 3},
    ),
    "333": SignatureCase(
        tag="333",
        label="(3,3,3)",
        x_generators=("a", "b"),
        sheets=3,
        coefficients=(1, 1),
        modulus=3,
        g_words=("a3", "b3", "ababab", "aba"),
        h_words=("a3", "b3", "ababab", "aba"),
        h_conjugators=("", "a", "a2"),
        punctures={"a": ((1, 0), 3), "b": ((0, 1), 3), "c": ((-1, -1), 3)},
        y_weights={"a": 3, "b": 3},
    ),
}

CASE_TAGS = tuple(_CASES)
TORUS_TAGS = ("2222", "244", "236", "333")


def get_case(case) -> SignatureCase:
    if isinstance(case, SignatureCase):
        return case
    tag = str(case).strip()
    if tag in _CASES:
        return _CASES[tag]
    for c in _CASES.values():
        if tag.replace(" ", "") in (c.label, c.label.replace("∞", "inf")):
            return c
    raise UnknownCase(f"unknown signature case {case!r}; expected one of {', '.join(CASE_TAGS)}")


def congruence_member(case, v) -> bool:
    case = get_case(case)
    v = tuple(v)
    if len(v) != case.rank:
        raise RankMismatch(f"case {case.label} needs a vector of length {case.rank}, got {len(v)}")
    return case.congruence_value(v) == 0


def subgroup_G(case) -> list[Word]:
    return [Word.parse(w) for w in get_case(case).g_words]


def puncture_generators(n_extra: int) -> list[str]:
    return [f"g{i}" for i in range(1, n_extra + 1)]


def y_generators(case, n_extra: int) -> list[str]:
    return list(get_case(case).x_generators) + puncture_generators(n_extra)


def subgroup_H(case, n_extra: int) -> list[Word]:
    case = get_case(case)
    if n_extra < 0:
        raise ValueError("n_extra must be >= 0")
    gens = [Word.parse(w) for w in case.h_words]
    for g in puncture_generators(n_extra):
        gamma = Word((g,))
        for c in case.h_conjugators:
            conj = Word.parse(c)
            gens.append(conj * gamma * conj.inverse())
    return gens


def h_congruence_member(case, v) -> bool:
    """The H congruence on Y-homology: same form on alpha/beta[/epsilon], puncture terms free."""
    case = get_case(case)
    return case.congruence_value(tuple(v)[: case.rank]) == 0


def abelianize_x(case, word: Word) -> tuple[int, ...]:
    return abelianize(word, get_case(case).x_generators)


def covering_graph(case, which: str = "G", n_extra: int = 0):
    """Stallings graph of the covering subgroup named by the case's family.

    The displayed families are read as normal generators (every covering in
    play is normal); for (3,3,3) the family generates the index-3 kernel only
    as a normal subgroup, so the closure is folded, not the bare list.
    """
    case = get_case(case)
    which = which.upper()
    if which == "G":
        return fold_normal(subgroup_G(case), case.x_generators)
    if which == "H":
        return fold_normal(subgroup_H(case, n_extra), y_generators(case, n_extra))
    raise ValueError(f"which must be 'G' or 'H', got {which!r}")
