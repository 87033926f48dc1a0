"""Words in free groups.

Letters are ASCII strings: a lowercase letter is a generator, its uppercase
form the inverse.  Puncture generators are ``g1, g2, ...`` with inverses
``G1, G2, ...``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import RankMismatch

_TOKEN = re.compile(r"([gG]\d+|[a-zA-Z])(?:\^(-?\d+)|(\d+))?")


def invert_letter(letter: str) -> str:
    return letter[0].swapcase() + letter[1:]


def generator_of(letter: str) -> str:
    return letter[0].lower() + letter[1:]


def is_inverse(letter: str) -> bool:
    return letter[0].isupper()


@dataclass(frozen=True)
class Word:
    letters: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"a2b2"``, ``"ab^3A"``, ``"g1^2"`` and the like.

        Digits right after a plain letter are an exponent; after ``g`` they
        are the puncture index, so ``g`` powers need ``^``.
        """
        compact = re.sub(r"[\s*·]", "", text)
        if compact in ("", "1"):
            return cls(())
        letters: list[str] = []
        pos = 0
        while pos < len(compact):
            m = _TOKEN.match(compact, pos)
            if m is None:
                raise ValueError(f"cannot parse word {text!r} at position {pos}")
            letter, caret, digits = m.groups()
            power = int(caret) if caret is not None else int(digits) if digits is not None else 1
            if power < 0:
                letter, power = invert_letter(letter), -power
            letters.extend([letter] * power)
            pos = m.end()
        return cls(tuple(letters))

    @classmethod
    def of(cls, *parts) -> "Word":
        """Concatenate strings and words: ``Word.of("a", gamma, "A")``."""
        letters: list[str] = []
        for part in parts:
            letters.extend(part.letters if isinstance(part, Word) else Word.parse(part).letters)
        return cls(tuple(letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple(invert_letter(x) for x in reversed(self.letters)))

    def __str__(self):
        return "".join(self.letters) or "1"


def reduce(word: Word) -> Word:
    stack: list[str] = []
    for x in word.letters:
        if stack and stack[-1] == invert_letter(x):
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack))


def abelianize(word: Word, generators: Sequence[str]) -> tuple[int, ...]:
    """Exponent-sum vector in the order of ``generators``."""
    index = {g: i for i, g in enumerate(generators)}
    vec = [0] * len(generators)
    for x in word.letters:
        g = generator_of(x)
        if g not in index:
            raise RankMismatch(f"letter {x!r} is not in the alphabet {list(generators)}")
        vec[index[g]] += -1 if is_inverse(x) else 1
    return tuple(vec)


def alphabet(generators: Iterable[str]) -> list[str]:
    gens = list(generators)
    return gens + [invert_letter(g) for g in gens]


def random_reduced_word(generators: Sequence[str], length: int, rng: random.Random) -> Word:
    letters = alphabet(generators)
    out: list[str] = []
    while len(out) < length:
        x = rng.choice(letters)
        if out and out[-1] == invert_letter(x):
            continue
        out.append(x)
    return Word(tuple(out))
