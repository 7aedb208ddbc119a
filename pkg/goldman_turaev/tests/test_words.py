import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goldman_turaev.parser import parse_word
from goldman_turaev.tests.strategies import letters, words, words_with_rotation
from goldman_turaev.words import (
    Family,
    GenusMismatchError,
    Letter,
    Word,
    alphabet,
    canonical_cyclic,
    conjugate,
    cyclic_reduce,
    insert_cancelling_pair,
    invert,
    letter_rank,
    reduce,
    rotate,
    same_genus,
    subword,
)


def test_alphabet_is_sorted_by_boundary_order():
    labels = [str(x) for x in alphabet(2)]
    assert labels == [
        "a1", "b1", "a1^-1", "b1^-1", "a2", "b2", "a2^-1", "b2^-1",
    ]
    assert [letter_rank(x) for x in alphabet(3)] == list(range(12))


def test_alphabet_rejects_genus_zero():
    with pytest.raises(ValueError):
        alphabet(0)


def test_letter_index_must_be_positive():
    with pytest.raises(ValueError):
        Letter(Family.A, 0)


def test_word_rejects_letters_beyond_genus():
    with pytest.raises(ValueError):
        Word((Letter(Family.B, 3),), 2)


@given(letters(3))
def test_inverse_is_an_involution(x):
    assert x.inverse().inverse() == x
    assert x.inverse() != x
    assert x.is_generator != x.inverse().is_generator


def test_reduce_cancels_adjacent_pairs():
    assert str(reduce(parse_word("a1 A1 b1", 2))) == "b1"
    assert reduce(parse_word("a1 b1 B1 A1", 1)).letters == ()
    # reduction is not cyclic
    assert str(reduce(parse_word("A1 b1 a1", 1))) == "a1^-1 b1 a1"


def test_cyclic_reduce_strips_matching_ends():
    assert str(cyclic_reduce(parse_word("A1 b1 a1", 1))) == "b1"
    assert str(cyclic_reduce(parse_word("b2 a1 A1 a2 B2", 2))) == "a2"
    assert str(cyclic_reduce(parse_word("B1 a2 a1 a1 b1", 2))) == "a2 a1 a1"


def _contractions(letters):
    """Every word obtained by cancelling one adjacent inverse pair."""
    for k in range(len(letters) - 1):
        if letters[k + 1] == letters[k].inverse():
            yield letters[:k] + letters[k + 2 :]


def _rotations(letters):
    return {letters[k:] + letters[:k] for k in range(len(letters))} or {letters}


def _irreducible_forms(letters, cyclic=False):
    """Dead ends of single contractions applied in every possible order.

    With `cyclic`, rotations are free moves, so contractions may also happen across
    the wrap-around.
    """
    seen, pending, forms = set(), [letters], set()
    while pending:
        current = pending.pop()
        if current in seen:
            continue
        seen.add(current)
        moves = _rotations(current) if cyclic else {current}
        following = [nxt for moved in moves for nxt in _contractions(moved)]
        if following:
            pending.extend(following)
        elif cyclic:
            forms |= moves
        else:
            forms.add(current)
    return forms


@settings(max_examples=60)
@given(words(genus=1, min_size=0, max_size=8))
def test_reduce_agrees_with_every_contraction_order(w):
    assert _irreducible_forms(w.letters) == {reduce(w).letters}


@settings(max_examples=60)
@given(words(genus=1, min_size=0, max_size=7))
def test_cyclic_reduce_agrees_with_contractions_up_to_rotation(w):
    assert _irreducible_forms(w.letters, cyclic=True) == _rotations(cyclic_reduce(w).letters)


@given(words(max_size=10))
def test_reduce_is_idempotent_and_keeps_parity(w):
    once = reduce(w)
    assert reduce(once) == once
    assert len(once) <= len(w)
    assert len(once) % 2 == len(w) % 2


@given(words(max_size=8))
def test_word_times_inverse_reduces_to_empty(w):
    assert reduce(w + invert(w)).letters == ()


def test_canonical_cyclic_picks_least_rotation():
    assert str(canonical_cyclic(parse_word("b1 a1", 2))) == "a1 b1"
    assert str(canonical_cyclic(parse_word("a2 a1 B1", 2))) == "a1 b1^-1 a2"
    assert canonical_cyclic(parse_word("a1 B1 A1 b1", 1)) != canonical_cyclic(
        parse_word("a1 b1 A1 B1", 1)
    )
    assert canonical_cyclic(parse_word("a1 A1", 1)).is_trivial


@given(words_with_rotation(max_size=8))
def test_canonical_cyclic_ignores_rotation(case):
    w, k = case
    assert canonical_cyclic(rotate(w, k)) == canonical_cyclic(w)


@given(words(max_size=8), letters(2))
def test_canonical_cyclic_ignores_conjugation(w, x):
    assert canonical_cyclic(conjugate(w, x)) == canonical_cyclic(w)


@settings(max_examples=50)
@given(words(max_size=6), st.data())
def test_canonical_cyclic_ignores_cancelling_pairs(w, data):
    position = data.draw(st.integers(min_value=0, max_value=len(w)))
    x = data.draw(letters(2))
    assert canonical_cyclic(insert_cancelling_pair(w, position, x)) == canonical_cyclic(w)


def test_rotate_moves_prefix_to_end(example_word):
    assert str(rotate(example_word)) == "b1^-1 a2 a1 a1"
    assert rotate(example_word, 4) == example_word
    assert rotate(example_word, -1) == rotate(example_word, 3)
    assert rotate(Word.empty(2), 3) == Word.empty(2)


def test_subword_wraps_around(example_word):
    assert str(subword(example_word, 3, 4)) == "a2 a1"
    assert str(subword(example_word, 5, 2)) == "a1 b1^-1"
    assert str(subword(example_word, 4, 1)) == "a1 a1"
    assert subword(example_word, 2, 1) == rotate(example_word, 1)


def test_subword_of_empty_word_is_an_error():
    with pytest.raises(ValueError):
        subword(Word.empty(1), 1, 1)


def test_conjugate_is_unreduced(example_word):
    assert str(conjugate(example_word, Letter(Family.B, 2))) == (
        "b2^-1 a1 b1^-1 a2 a1 b2"
    )


def test_insert_cancelling_pair_bounds(example_word):
    x = Letter(Family.A, 1)
    assert str(insert_cancelling_pair(example_word, 4, x)) == "a1 b1^-1 a2 a1 a1 a1^-1"
    with pytest.raises(ValueError):
        insert_cancelling_pair(example_word, 5, x)


def test_genus_mixing_is_rejected():
    with pytest.raises(GenusMismatchError):
        parse_word("a1", 1) + parse_word("a1", 2)
    with pytest.raises(GenusMismatchError):
        same_genus([parse_word("a1", 1), parse_word("b1", 2)])
    with pytest.raises(ValueError):
        same_genus([])
