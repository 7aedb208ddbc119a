"""Arc diagrams of words: gates, their boundary order, and linking numbers.

A word w = x_1 ... x_p is drawn in a small disk around the base point. Occurrence i
leaves the disk through the gate of x_i and comes back through the gate of x_i^-1;
the i-th partition is the chord from the gate x_i^-1 to the gate x_{i+1}. All gates
sit on one boundary arc and are totally ordered there.

Linking numbers are computed from the letters alone (`gate_key` + `dot`).
The sorted `Diagram` exists for the independent chord-interleaving oracle and for
export; the two code paths are compared by the test-suite and `check oracle`.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional

from goldman_turaev.words import Letter, Word, letter_rank, same_genus

logger = logging.getLogger(__name__)

__all__ = [
    "Chain0",
    "Crossing",
    "Diagram",
    "DiagramError",
    "Gate",
    "LinkingParityError",
    "Partition",
    "Tag",
    "boundary",
    "chord_sign_oracle",
    "dot",
    "gate_compare",
    "gate_key",
    "interleaving_sign",
    "intersection_count",
    "intersections",
    "letter_rank",
    "linking_matrix",
    "lk_pair",
    "lk_self",
    "pair_linking_matrix",
    "self_intersections",
]


class DiagramError(ValueError):
    """Raised for gates or partitions that do not fit the diagram at hand."""


class LinkingParityError(RuntimeError):
    """Raised when two partition boundaries pair to an odd number."""


class Tag(enum.IntEnum):
    FIRST = 0
    SECOND = 1


@dataclass(frozen=True, slots=True)
class Gate:
    """Endpoint on the boundary arc: word `tag`, occurrence `occ` (1-based), `label`."""

    tag: Tag
    occ: int
    label: Letter

    def __str__(self) -> str:
        return f"{self.label}({self.tag.name.lower()},{self.occ})"


@dataclass(frozen=True, slots=True)
class Partition:
    """The cut after the `index`-th letter of word `tag`."""

    tag: Tag
    index: int

    def __str__(self) -> str:
        return f"phi{self.index}({self.tag.name.lower()})"


GateKey = tuple[int, int, int]


class Crossing(NamedTuple):
    """A pair of partitions whose chords cross, with the crossing sign."""

    i: int
    j: int
    sign: int


class Chain0:
    """Integer combination of gates (degree-0 chains of the diagram)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Gate, int] | Iterable[tuple[Gate, int]] = ()):
        acc: Counter[Gate] = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for gate, coeff in items:
            acc[gate] += coeff
        self._terms = {gate: coeff for gate, coeff in acc.items() if coeff}

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset[Gate]:
        return frozenset(self._terms)

    def __getitem__(self, gate: Gate) -> int:
        return self._terms.get(gate, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: Chain0) -> Chain0:
        return Chain0([*self.items(), *other.items()])

    def __neg__(self) -> Chain0:
        return Chain0({gate: -coeff for gate, coeff in self.items()})

    def __sub__(self, other: Chain0) -> Chain0:
        return self + (-other)

    def __mul__(self, scalar: int) -> Chain0:
        return Chain0({gate: scalar * coeff for gate, coeff in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain0):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " ".join(f"{coeff:+d}*{gate}" for gate, coeff in self._terms.items())
        return f"Chain0({body or '0'})"


def gate_key(g: Gate) -> GateKey:
    """Sort key realizing the boundary order: (rank, ±tag, ±occurrence).

    The sign is + for a generator label and - for an inverse one, so equal labels in
    one word ascend or descend with the occurrence, and between two words only the
    tag decides. Distinct gates never share a key.
    """
    s = 1 if g.label.is_generator else -1
    return letter_rank(g.label), s * g.tag, s * g.occ


def _cmp(k1: GateKey, k2: GateKey) -> int:
    return (k1 > k2) - (k1 < k2)


def gate_compare(g1: Gate, g2: Gate) -> int:
    """Boundary order of two gates: -1, 0 or +1.

    Distinct labels compare by `letter_rank`. Equal labels in the same word compare
    by occurrence, ascending for a generator label and descending for an inverse
    label; equal labels in different words put FIRST before SECOND for a generator
    label and after it otherwise. Positions never matter between the two words.

    Any two gates are compared, whichever word they came from; use
    `Diagram.compare` to also reject gates that are not in a given diagram.
    """
    return _cmp(gate_key(g1), gate_key(g2))


def dot(c1: Chain0, c2: Chain0) -> int:
    """The alternating form x.y = +1 (x < y), 0 (x = y), -1 (x > y), extended bilinearly."""
    return sum(
        a * b * -gate_compare(x, y) for x, a in c1.items() for y, b in c2.items()
    )


def _letter_gate(tag: Tag, w: Word, i: int) -> Gate:
    return Gate(tag, i, w[i - 1])


def _inverse_gate(tag: Tag, w: Word, i: int) -> Gate:
    return Gate(tag, i, w[i - 1].inverse())


def _check_index(w: Word, i: int) -> None:
    if not 1 <= i <= len(w):
        raise DiagramError(f"Partition index {i} outside 1..{len(w)}")


def _partition_boundary(tag: Tag, w: Word, i: int) -> Chain0:
    _check_index(w, i)
    following = i % len(w) + 1
    return Chain0({_letter_gate(tag, w, following): 1, _inverse_gate(tag, w, i): -1})


def _half(value: int, what: str) -> int:
    if value % 2:
        raise LinkingParityError(f"Odd pairing {value} for {what}")
    return value // 2


@dataclass(frozen=True)
class Diagram:
    """Arc diagram of one word, or of an ordered pair of words of equal genus."""

    words: tuple[Word, ...]
    gates: tuple[Gate, ...] = field(init=False)
    _positions: dict[Gate, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.words) not in (1, 2):
            raise DiagramError(f"A diagram holds one or two words, got {len(self.words)}")
        same_genus(self.words)
        gates = [
            gate
            for tag, w in zip(Tag, self.words)
            for i in range(1, len(w) + 1)
            for gate in (_letter_gate(tag, w, i), _inverse_gate(tag, w, i))
        ]
        ordered = tuple(sorted(gates, key=gate_key))
        object.__setattr__(self, "gates", ordered)
        object.__setattr__(
            self, "_positions", {gate: n for n, gate in enumerate(ordered)}
        )
        logger.debug("Diagram of %s: %d gates", [str(w) for w in self.words], len(ordered))

    @classmethod
    def of_word(cls, w: Word) -> Diagram:
        return cls((w,))

    @classmethod
    def of_pair(cls, v: Word, w: Word) -> Diagram:
        return cls((v, w))

    @property
    def genus(self) -> int:
        return self.words[0].genus

    def word(self, tag: Tag) -> Word:
        if tag >= len(self.words):
            raise DiagramError(f"No {tag.name} word in this diagram")
        return self.words[tag]

    def labels(self) -> list[str]:
        return [str(gate.label) for gate in self.gates]

    def partitions(self) -> list[Partition]:
        return [
            Partition(tag, i)
            for tag, w in zip(Tag, self.words)
            for i in range(1, len(w) + 1)
        ]

    def __contains__(self, gate: object) -> bool:
        return gate in self._positions

    def position(self, gate: Gate) -> int:
        try:
            return self._positions[gate]
        except KeyError:
            raise DiagramError(f"Gate {gate} is not in this diagram") from None

    def compare(self, g1: Gate, g2: Gate) -> int:
        """`gate_compare`, rejecting gates from another diagram."""
        for gate in (g1, g2):
            if gate not in self:
                raise DiagramError(f"Gate {gate} is not in this diagram")
        return gate_compare(g1, g2)

    def endpoints(self, p: Partition) -> tuple[Gate, Gate]:
        """(start, end) gates of the chord of `p`."""
        w = self.word(p.tag)
        _check_index(w, p.index)
        following = p.index % len(w) + 1
        return _inverse_gate(p.tag, w, p.index), _letter_gate(p.tag, w, following)


def boundary(p: Partition, d: Diagram) -> Chain0:
    """Boundary of a partition chord: gate(x_{i+1}) - gate(x_i^-1)."""
    start, end = d.endpoints(p)
    return Chain0({end: 1, start: -1})


def _check_distinct(i: int, j: int) -> None:
    if i == j:
        raise DiagramError(f"Linking number of partition {i} with itself")


def lk_self(w: Word, i: int, j: int) -> int:
    """Linking number of the partitions i and j of a single word.

    Any i != j is accepted; lk(j, i) = -lk(i, j).

    Examples:
        >>> from goldman_turaev.parser import parse_word
        >>> w = parse_word("a1 B1 a2 a1", 2)
        >>> lk_self(w, 1, 3), lk_self(w, 3, 4)
        (0, -1)
    """
    if not w.letters:
        raise DiagramError("The empty word has no partitions")
    _check_distinct(i, j)
    value = dot(
        _partition_boundary(Tag.FIRST, w, i), _partition_boundary(Tag.FIRST, w, j)
    )
    return _half(value, f"partitions {i}, {j} of {w}")


def lk_pair(v: Word, i: int, w: Word, j: int) -> int:
    """Linking number of partition i of `v` with partition j of `w` in the pair diagram."""
    same_genus((v, w))
    if not v.letters or not w.letters:
        raise DiagramError("The empty word has no partitions")
    value = dot(
        _partition_boundary(Tag.FIRST, v, i), _partition_boundary(Tag.SECOND, w, j)
    )
    return _half(value, f"partition {i} of {v} and {j} of {w}")


def interleaving_sign(x: int, y: int, z: int, t: int) -> int:
    """Crossing sign of the chord x -> y with the chord z -> t, given boundary positions.

    Chords that do not interleave give 0. Otherwise the sign is +1 when the first
    chord runs forward along the boundary and the second chord starts inside it,
    and flips with either of those conditions.
    """
    lo, hi = min(x, y), max(x, y)
    z_inside = lo < z < hi
    t_inside = lo < t < hi
    if z_inside == t_inside:
        return 0
    forward = 1 if x < y else -1
    return forward if z_inside else -forward


def chord_sign_oracle(d: Diagram, p1: Partition, p2: Partition) -> int:
    """Signed crossing of two chords, read off the sorted boundary positions only."""
    x, y = (d.position(g) for g in d.endpoints(p1))
    z, t = (d.position(g) for g in d.endpoints(p2))
    if len({x, y, z, t}) != 4:
        raise DiagramError(f"Chords {p1} and {p2} share an endpoint")
    return interleaving_sign(x, y, z, t)


def _chord_keys(tag: Tag, w: Word) -> list[tuple[GateKey, GateKey]]:
    """(start, end) gate keys of every partition chord of `w`."""
    p = len(w)
    return [
        (
            gate_key(_inverse_gate(tag, w, i)),
            gate_key(_letter_gate(tag, w, i % p + 1)),
        )
        for i in range(1, p + 1)
    ]


def _pairing(first: tuple[GateKey, GateKey], second: tuple[GateKey, GateKey]) -> int:
    # dot(end1 - start1, end2 - start2) with x.y = compare(y, x)
    (s1, e1), (s2, e2) = first, second
    return _cmp(e2, e1) - _cmp(s2, e1) - _cmp(e2, s1) + _cmp(s2, s1)


def linking_matrix(w: Word) -> list[list[int]]:
    """p x p antisymmetric matrix of lk(phi_i w, phi_j w), zero diagonal.

    Agrees entrywise with `lk_self`; gate keys are computed once per chord.
    """
    p = len(w)
    chords = _chord_keys(Tag.FIRST, w)
    matrix = [[0] * p for _ in range(p)]
    for a in range(p):
        for b in range(a + 1, p):
            value = _half(_pairing(chords[a], chords[b]), f"partitions {a + 1}, {b + 1} of {w}")
            matrix[a][b] = value
            matrix[b][a] = -value
    return matrix


def pair_linking_matrix(v: Word, w: Word) -> list[list[int]]:
    """len(v) x len(w) matrix of lk(phi_i v, phi_j w); agrees entrywise with `lk_pair`."""
    same_genus((v, w))
    v_chords = _chord_keys(Tag.FIRST, v)
    w_chords = _chord_keys(Tag.SECOND, w)
    return [
        [
            _half(_pairing(a, b), f"partition {i} of {v} and {j} of {w}")
            for j, b in enumerate(w_chords, start=1)
        ]
        for i, a in enumerate(v_chords, start=1)
    ]


def self_intersections(w: Word) -> list[Crossing]:
    """Crossings (i < j) of the chords of `w`, i.e. self-intersections of its loop."""
    matrix = linking_matrix(w)
    p = len(w)
    return [
        Crossing(i + 1, j + 1, matrix[i][j])
        for i in range(p)
        for j in range(i + 1, p)
        if matrix[i][j]
    ]


def intersections(v: Word, w: Word) -> list[Crossing]:
    """Crossings between a chord of `v` (i) and a chord of `w` (j) in the pair diagram."""
    return [
        Crossing(i, j, sign)
        for i, row in enumerate(pair_linking_matrix(v, w), start=1)
        for j, sign in enumerate(row, start=1)
        if sign
    ]


def intersection_count(v: Word, w: Optional[Word] = None) -> int:
    """Number of chord crossings drawn for these representatives.

    With one word this counts self-crossings, with two the crossings between them.
    It is not the minimal intersection number of the classes.
    """
    crossings = self_intersections(v) if w is None else intersections(v, w)
    return len(crossings)
