"""Integer combinations of cyclic words and of their tensors.

Elements are immutable, keyed by canonical `CyclicWord`s (or tuples of them), and
never store zero coefficients, so equality of two combinations is equality of maps.
"""

from __future__ import annotations

from collections import Counter
from typing import Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from goldman_turaev.words import CyclicWord, GenusMismatchError, Word, canonical_cyclic

K = TypeVar("K", bound=Hashable)


class FreeModuleElement(Generic[K]):
    """Finite-support map from basis keys to integers, with a fixed genus."""

    __slots__ = ("_terms", "genus")

    def __init__(
        self,
        terms: Mapping[K, int] | Iterable[tuple[K, int]] = (),
        *,
        genus: int,
    ):
        acc: Counter[K] = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            self._check_key(key, genus)
            acc[key] += coeff
        self._terms: dict[K, int] = {key: coeff for key, coeff in acc.items() if coeff}
        self.genus = genus

    @classmethod
    def zero(cls, genus: int) -> Self:
        return cls(genus=genus)

    @staticmethod
    def _words(key: K) -> tuple[CyclicWord, ...]:
        raise NotImplementedError

    @classmethod
    def _check_key(cls, key: K, genus: int) -> None:
        for cw in cls._words(key):
            if not isinstance(cw, CyclicWord):
                raise TypeError(f"Basis elements must be CyclicWord, got {type(cw).__name__}")
            if cw.genus != genus:
                raise GenusMismatchError(f"Cannot mix genus {cw.genus} with genus {genus}")

    @classmethod
    def sort_key(cls, key: K) -> tuple:
        return tuple(cw.sort_key for cw in cls._words(key))

    def _same_genus(self, other: FreeModuleElement) -> None:
        if type(other) is not type(self):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatchError(f"Cannot mix genus {self.genus} with genus {other.genus}")

    def items(self) -> list[tuple[K, int]]:
        """Terms in a deterministic order (shortlex on the words of each key)."""
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    def support(self) -> frozenset[K]:
        return frozenset(self._terms)

    def __getitem__(self, key: K) -> int:
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator[K]:
        return iter(key for key, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: Self) -> Self:
        self._same_genus(other)
        return type(self)([*self._terms.items(), *other._terms.items()], genus=self.genus)

    def __neg__(self) -> Self:
        return type(self)({key: -coeff for key, coeff in self._terms.items()}, genus=self.genus)

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __mul__(self, scalar: int) -> Self:
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)(
            {key: scalar * coeff for key, coeff in self._terms.items()}, genus=self.genus
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.genus == other.genus and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.genus, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from goldman_turaev.utils import format_combination

        return f"{type(self).__name__}({format_combination(self)}, genus={self.genus})"


def sum_of(elements: Iterable[FreeModuleElement], zero: FreeModuleElement) -> FreeModuleElement:
    total = zero
    for element in elements:
        total = total + element
    return total


class LinComb(FreeModuleElement[CyclicWord]):
    """Element of Z[pi-hat]: integer combination of free homotopy classes."""

    __slots__ = ()

    @staticmethod
    def _words(key: CyclicWord) -> tuple[CyclicWord, ...]:
        return (key,)

    @classmethod
    def basis(cls, cw: CyclicWord, coeff: int = 1) -> LinComb:
        return cls({cw: coeff}, genus=cw.genus)

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> LinComb:
        return cls.basis(canonical_cyclic(w), coeff)

    def drop_trivial(self) -> LinComb:
        """Image in Z[pi-hat]/Z1."""
        return LinComb(
            {cw: coeff for cw, coeff in self._terms.items() if not cw.is_trivial},
            genus=self.genus,
        )


class TensorComb(FreeModuleElement[tuple[CyclicWord, CyclicWord]]):
    """Element of Z[pi-hat] (x) Z[pi-hat]."""

    __slots__ = ()

    @staticmethod
    def _words(key: tuple[CyclicWord, CyclicWord]) -> tuple[CyclicWord, ...]:
        return key

    @classmethod
    def wedge(cls, u: CyclicWord, v: CyclicWord, coeff: int = 1) -> TensorComb:
        """coeff * (u (x) v - v (x) u)."""
        return cls([((u, v), coeff), ((v, u), -coeff)], genus=u.genus)

    def swap(self) -> TensorComb:
        """The flip u (x) v -> v (x) u."""
        return TensorComb(
            {(v, u): coeff for (u, v), coeff in self._terms.items()}, genus=self.genus
        )

    def is_antisymmetric(self) -> bool:
        return self.swap() == -self

    def quotient_by_trivial(self) -> TensorComb:
        """Drop every term with a trivial tensor factor."""
        return TensorComb(
            {
                (u, v): coeff
                for (u, v), coeff in self._terms.items()
                if not (u.is_trivial or v.is_trivial)
            },
            genus=self.genus,
        )

    def wedge_terms(self) -> list[tuple[CyclicWord, CyclicWord, int]]:
        """Each antisymmetric pair once, as (u, v, c) with u before v in shortlex."""
        if not self.is_antisymmetric():
            raise ValueError("Only antisymmetric tensors have a wedge presentation")
        return [
            (u, v, coeff) for (u, v), coeff in self.items() if u.sort_key < v.sort_key
        ]


class TripleComb(FreeModuleElement[tuple[CyclicWord, CyclicWord, CyclicWord]]):
    """Element of the triple tensor power, used by the co-Jacobi check."""

    __slots__ = ()

    @staticmethod
    def _words(key: tuple[CyclicWord, CyclicWord, CyclicWord]) -> tuple[CyclicWord, ...]:
        return key

    def rotate(self) -> TripleComb:
        """Cyclic permutation u (x) v (x) z -> z (x) u (x) v."""
        return TripleComb(
            {(z, u, v): coeff for (u, v, z), coeff in self._terms.items()},
            genus=self.genus,
        )

    def quotient_by_trivial(self) -> TripleComb:
        return TripleComb(
            {
                key: coeff
                for key, coeff in self._terms.items()
                if not any(cw.is_trivial for cw in key)
            },
            genus=self.genus,
        )


def tensor(left: LinComb, right: LinComb) -> TensorComb:
    if left.genus != right.genus:
        raise GenusMismatchError(f"Cannot mix genus {left.genus} with genus {right.genus}")
    return TensorComb(
        [((u, v), a * b) for u, a in left.items() for v, b in right.items()],
        genus=left.genus,
    )
