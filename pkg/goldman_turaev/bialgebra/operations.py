"""Cobracket and bracket of words, computed from linking numbers of partitions.

    delta(w) = sum_{i<j} lk(phi_i w, phi_j w) ( [w_{i+1,j}] (x) [w_{j+1,i}] - flip )
    <v, w>   = sum_{i,j}  lk(phi_i v, phi_j w) [nu^i(v) nu^j(w)]

Only pairs with nonzero linking number contribute, so both sums run over the
crossings of the arc diagram. Inputs are used as given (unreduced words are fine);
only the output factors are canonicalized.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

from goldman_turaev.bialgebra.combinations import (
    LinComb,
    TensorComb,
    TripleComb,
    sum_of,
)
from goldman_turaev.diagram import intersections, self_intersections
from goldman_turaev.words import (
    CyclicWord,
    GenusMismatchError,
    Word,
    canonical_cyclic,
    rotate,
    same_genus,
    subword,
)

logger = logging.getLogger(__name__)


class CobracketTerm(NamedTuple):
    i: int
    j: int
    sign: int
    left: CyclicWord
    right: CyclicWord


class BracketTerm(NamedTuple):
    i: int
    j: int
    sign: int
    word: CyclicWord


def cobracket_terms(w: Word) -> list[CobracketTerm]:
    """One term per self-crossing of the chords of `w`."""
    if len(w) <= 1:
        return []
    return [
        CobracketTerm(
            i,
            j,
            sign,
            canonical_cyclic(subword(w, i + 1, j)),
            canonical_cyclic(subword(w, j + 1, i)),
        )
        for i, j, sign in self_intersections(w)
    ]


def cobracket_word(w: Word) -> TensorComb:
    """delta(w) in Z[pi-hat] (x) Z[pi-hat], before the quotient by Z1."""
    total = TensorComb.zero(w.genus)
    for term in cobracket_terms(w):
        total = total + TensorComb.wedge(term.left, term.right, term.sign)
    logger.debug("delta(%s) has %d terms", w, len(total))
    return total


def quotient_by_trivial(t: TensorComb) -> TensorComb:
    """Image in Z[pi-hat]/Z1 (x) Z[pi-hat]/Z1."""
    return t.quotient_by_trivial()


def bracket_terms(v: Word, w: Word) -> list[BracketTerm]:
    """One term per crossing between a chord of `v` and a chord of `w`."""
    same_genus((v, w))
    if not v.letters or not w.letters:
        return []
    return [
        BracketTerm(i, j, sign, canonical_cyclic(rotate(v, i) + rotate(w, j)))
        for i, j, sign in intersections(v, w)
    ]


def bracket_words(v: Word, w: Word) -> LinComb:
    """<v, w> in Z[pi-hat]; the trivial class is kept."""
    genus = same_genus((v, w))
    return LinComb(
        [(term.word, term.sign) for term in bracket_terms(v, w)], genus=genus
    )


def cobracket(x: LinComb, *, raw: bool = False) -> TensorComb:
    """Linear extension of delta; quotiented by Z1 unless `raw`."""
    total = sum_of(
        (coeff * cobracket_word(cw.word) for cw, coeff in x.items()),
        TensorComb.zero(x.genus),
    )
    return total if raw else quotient_by_trivial(total)


def bracket(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of <,>."""
    if x.genus != y.genus:
        raise GenusMismatchError(f"Cannot mix genus {x.genus} with genus {y.genus}")
    return sum_of(
        (
            a * b * bracket_words(u.word, v.word)
            for u, a in x.items()
            for v, b in y.items()
        ),
        LinComb.zero(x.genus),
    )


def act(a: LinComb, t: TensorComb) -> TensorComb:
    """a . (u (x) z) = <a, u> (x) z + u (x) <a, z>, in the quotient by Z1."""
    if a.genus != t.genus:
        raise GenusMismatchError(f"Cannot mix genus {a.genus} with genus {t.genus}")
    total = TensorComb.zero(t.genus)
    for (u, z), coeff in t.items():
        left = bracket(a, LinComb.basis(u))
        right = bracket(a, LinComb.basis(z))
        terms = [((x, z), coeff * c) for x, c in left.items()]
        terms += [((u, y), coeff * c) for y, c in right.items()]
        total = total + TensorComb(terms, genus=t.genus)
    return quotient_by_trivial(total)


def bracket_of_tensor(t: TensorComb) -> LinComb:
    """<,> applied to each tensor term: u (x) z -> <u, z>."""
    return sum_of(
        (coeff * bracket_words(u.word, z.word) for (u, z), coeff in t.items()),
        LinComb.zero(t.genus),
    )


def cobracket_left(t: TensorComb) -> TripleComb:
    """(delta (x) id)(t) in the quotient by Z1."""
    terms = []
    for (u, z), coeff in t.items():
        for (x, y), c in cobracket(LinComb.basis(u)).items():
            terms.append(((x, y, z), coeff * c))
    return TripleComb(terms, genus=t.genus).quotient_by_trivial()
