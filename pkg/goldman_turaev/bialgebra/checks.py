"""Executable well-definedness and Lie bialgebra identities.

Every checker recomputes both sides from scratch and returns True iff they agree
exactly. Cobracket identities live in Z[pi-hat]/Z1; bracket identities in Z[pi-hat].
"""

from __future__ import annotations

from goldman_turaev.bialgebra.combinations import LinComb
from goldman_turaev.bialgebra.operations import (
    act,
    bracket,
    bracket_of_tensor,
    bracket_words,
    cobracket,
    cobracket_left,
    cobracket_word,
    quotient_by_trivial,
)
from goldman_turaev.diagram import Diagram, Tag, gate_compare
from goldman_turaev.words import (
    Letter,
    Word,
    conjugate,
    insert_cancelling_pair,
    rotate,
    same_genus,
)


def _delta(w: Word):
    return quotient_by_trivial(cobracket_word(w))


def check_rotation_invariance(w: Word, k: int = 1) -> bool:
    return _delta(rotate(w, k)) == _delta(w)


def check_conjugation_invariance(w: Word, x: Letter) -> bool:
    return _delta(conjugate(w, x)) == _delta(w)


def check_cancelling_insertion(w: Word, position: int, x: Letter) -> bool:
    return _delta(insert_cancelling_pair(w, position, x)) == _delta(w)


def check_bracket_rotation_invariance(v: Word, w: Word, k: int = 1, m: int = 1) -> bool:
    """<nu^k v, nu^m w> = <v, w> in Z[pi-hat]."""
    return bracket_words(rotate(v, k), rotate(w, m)) == bracket_words(v, w)


def check_bracket_conjugation_invariance(v: Word, w: Word, x: Letter) -> bool:
    """Conjugating either argument by `x` leaves <v, w> unchanged."""
    expected = bracket_words(v, w)
    return (
        bracket_words(conjugate(v, x), w) == expected
        and bracket_words(v, conjugate(w, x)) == expected
    )


def check_antisymmetry(v: Word, w: Word) -> bool:
    return not (bracket_words(v, w) + bracket_words(w, v))


def check_jacobi(u: Word, v: Word, w: Word) -> bool:
    same_genus((u, v, w))
    a, b, c = (LinComb.from_word(x) for x in (u, v, w))
    total = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
    return not total


def check_cojacobi(w: Word) -> bool:
    """(1 + rho + rho^2)(delta (x) id) delta (w) = 0."""
    triple = cobracket_left(cobracket(LinComb.from_word(w)))
    once = triple.rotate()
    return not (triple + once + once.rotate())


def check_compatibility(v: Word, w: Word) -> bool:
    """delta<v, w> = v . delta(w) - w . delta(v), all in the quotient by Z1."""
    same_genus((v, w))
    a, b = LinComb.from_word(v), LinComb.from_word(w)
    lhs = cobracket(bracket(a, b))
    rhs = act(a, cobracket(b)) - act(b, cobracket(a))
    return lhs == rhs


def check_involutivity(w: Word) -> bool:
    """<,> o delta(w) vanishes in Z[pi-hat]/Z1."""
    return not bracket_of_tensor(cobracket(LinComb.from_word(w))).drop_trivial()


def check_pair_diagram_order(v: Word, w: Word) -> bool:
    """Order between a v-gate and a w-gate depends on labels only, never on positions."""
    d = Diagram.of_pair(v, w)
    first = [g for g in d.gates if g.tag is Tag.FIRST]
    second = [g for g in d.gates if g.tag is Tag.SECOND]
    outcome: dict[tuple[Letter, Letter], int] = {}
    for g in first:
        for h in second:
            key = (g.label, h.label)
            result = gate_compare(g, h)
            if outcome.setdefault(key, result) != result:
                return False
    return True
