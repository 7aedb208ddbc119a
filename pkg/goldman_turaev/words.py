"""Letters, words and cyclic words over the surface-group alphabet.

The fundamental group of a genus-g surface with one boundary component is free on
a_1, b_1, ..., a_g, b_g. Words are kept exactly as written: nothing here reduces
implicitly. Conjugacy classes (free homotopy classes of loops) are represented by
`CyclicWord`, the least rotation of the cyclically reduced word.

All values are frozen; every function is pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class GenusMismatchError(ValueError):
    """Raised when one operation is handed words of different genera."""


class Family(enum.Enum):
    A = "a"
    B = "b"


@dataclass(frozen=True, slots=True)
class Letter:
    """One generator a_k / b_k, or its inverse."""

    family: Family
    index: int
    inverted: bool = False

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"Handle index must be at least 1, got {self.index}")

    def inverse(self) -> Letter:
        return Letter(self.family, self.index, not self.inverted)

    @property
    def is_generator(self) -> bool:
        """True for a_k and b_k, False for their inverses."""
        return not self.inverted

    def __str__(self) -> str:
        suffix = "^-1" if self.inverted else ""
        return f"{self.family.value}{self.index}{suffix}"


def letter_rank(x: Letter) -> int:
    """Position of a letter in the boundary order a1 < b1 < a1^-1 < b1^-1 < a2 < ...

    Examples:
        >>> letter_rank(Letter(Family.A, 1))
        0
        >>> letter_rank(Letter(Family.B, 1, inverted=True))
        3
        >>> letter_rank(Letter(Family.A, 2))
        4
    """
    offset = 0 if x.family is Family.A else 1
    if x.inverted:
        offset += 2
    return 4 * (x.index - 1) + offset


def alphabet(genus: int) -> tuple[Letter, ...]:
    """All 4g letters, sorted by `letter_rank`."""
    if genus < 1:
        raise ValueError(f"Genus must be at least 1, got {genus}")
    return tuple(
        Letter(family, k, inverted)
        for k in range(1, genus + 1)
        for inverted in (False, True)
        for family in (Family.A, Family.B)
    )


def _check_genus(*genera: int) -> int:
    if not genera:
        raise ValueError("No words given")
    first = genera[0]
    for other in genera[1:]:
        if other != first:
            raise GenusMismatchError(f"Cannot mix genus {first} with genus {other}")
    return first


@dataclass(frozen=True, slots=True)
class Word:
    """A finite, possibly unreduced, sequence of letters of a fixed genus."""

    letters: tuple[Letter, ...]
    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.genus < 1:
            raise ValueError(f"Genus must be at least 1, got {self.genus}")
        for x in self.letters:
            if x.index > self.genus:
                raise ValueError(f"Letter {x} does not exist in genus {self.genus}")

    @classmethod
    def empty(cls, genus: int) -> Word:
        return cls((), genus)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, position: int) -> Letter:
        return self.letters[position]

    def __add__(self, other: Word) -> Word:
        genus = _check_genus(self.genus, other.genus)
        return Word(self.letters + other.letters, genus)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """Canonical representative of a conjugacy class.

    Only `canonical_cyclic` should build these; equality of two instances is then
    conjugacy of the words they came from. The empty cyclic word is the trivial
    class 1.
    """

    letters: tuple[Letter, ...]
    genus: int

    @property
    def word(self) -> Word:
        return Word(self.letters, self.genus)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # shortlex in the boundary letter order
        return len(self.letters), tuple(letter_rank(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


def invert(w: Word) -> Word:
    """Free-group inverse: reverse the word and invert every letter."""
    return Word(tuple(x.inverse() for x in reversed(w.letters)), w.genus)


def reduce(w: Word) -> Word:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    stack: list[Letter] = []
    for x in w.letters:
        if stack and stack[-1] == x.inverse():
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), w.genus)


def cyclic_reduce(w: Word) -> Word:
    """Free reduction followed by cancellation across the wrap-around."""
    letters = reduce(w).letters
    start, stop = 0, len(letters)
    while stop - start >= 2 and letters[start] == letters[stop - 1].inverse():
        start += 1
        stop -= 1
    return Word(letters[start:stop], w.genus)


def _least_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    if not letters:
        return letters
    ranks = [letter_rank(x) for x in letters]
    shift = min(range(len(letters)), key=lambda k: ranks[k:] + ranks[:k])
    return letters[shift:] + letters[:shift]


def canonical_cyclic(w: Word) -> CyclicWord:
    """Canonical representative of the conjugacy class of `w`.

    Examples:
        >>> a1, b1 = Letter(Family.A, 1), Letter(Family.B, 1)
        >>> str(canonical_cyclic(Word((b1, a1), 1)))
        'a1 b1'
        >>> canonical_cyclic(Word((a1, a1.inverse()), 1)).is_trivial
        True
    """
    return CyclicWord(_least_rotation(cyclic_reduce(w).letters), w.genus)


def rotate(w: Word, k: int = 1) -> Word:
    """nu^k: move the first k letters to the end. The empty word is fixed."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return Word(w.letters[k:] + w.letters[:k], w.genus)


def subword(w: Word, s: int, t: int) -> Word:
    """Cyclic segment from the s-th to the t-th letter, both inclusive, 1-based.

    Indices are taken modulo the length; when s > t the segment wraps around.
    """
    p = len(w.letters)
    if p == 0:
        raise ValueError("Sub-words of the empty word are undefined")
    start, stop = (s - 1) % p, (t - 1) % p
    if start <= stop:
        return Word(w.letters[start : stop + 1], w.genus)
    return Word(w.letters[start:] + w.letters[: stop + 1], w.genus)


def conjugate(w: Word, x: Letter) -> Word:
    """x^-1 w x, unreduced."""
    return Word((x.inverse(), *w.letters, x), w.genus)


def insert_cancelling_pair(w: Word, position: int, x: Letter) -> Word:
    """Insert x x^-1 after the first `position` letters (0 <= position <= len(w))."""
    if not 0 <= position <= len(w.letters):
        raise ValueError(f"Insertion position {position} outside 0..{len(w.letters)}")
    letters = w.letters
    return Word(letters[:position] + (x, x.inverse()) + letters[position:], w.genus)


def same_genus(words: Iterable[Word | CyclicWord]) -> int:
    """Common genus of the given words; raises GenusMismatchError if they differ."""
    return _check_genus(*(w.genus for w in words))
