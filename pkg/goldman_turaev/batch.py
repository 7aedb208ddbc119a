"""Linking numbers and chord signs for many words of one length at once.

A batch is an integer array of shape (n, p): row k is a word written as indices into
a fixed tuple of letters. Gate keys are packed into one integer per gate so that
integer comparison reproduces `gate_key` order within a word, and every partition
pair of every row is then handled by array arithmetic.

Functions:
    letter_tables: Per-letter rank, inverse rank and generator flag.
    encode: Words as a code array.
    word_codes: A slice of the lexicographic list of all words of one length.
    linking_pairings: dot of partition boundaries for all pairs, before halving.
    chord_signs: Interleaving signs of the chords in the sorted boundary order.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from goldman_turaev.words import Letter, Word, letter_rank


class LetterTables(NamedTuple):
    ranks: np.ndarray
    inverse_ranks: np.ndarray
    generator: np.ndarray


def letter_tables(letters: Sequence[Letter]) -> LetterTables:
    return LetterTables(
        ranks=np.array([letter_rank(x) for x in letters], dtype=np.int32),
        inverse_ranks=np.array([letter_rank(x.inverse()) for x in letters], dtype=np.int32),
        generator=np.array([x.is_generator for x in letters], dtype=bool),
    )


def encode(words: Sequence[Word], letters: Sequence[Letter]) -> np.ndarray:
    """Code array of equal-length words; raises ValueError on a foreign letter."""
    index = {x: n for n, x in enumerate(letters)}
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise ValueError(f"A batch holds words of one length, got {sorted(lengths)}")
    try:
        rows = [[index[x] for x in w] for w in words]
    except KeyError as exc:
        raise ValueError(f"Letter {exc.args[0]} is not in the batch alphabet") from None
    p = lengths.pop() if lengths else 0
    return np.array(rows, dtype=np.int64).reshape(len(words), p)


def word_codes(alphabet_size: int, length: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of all words of `length`, in `itertools.product` order."""
    index = np.arange(start, stop, dtype=np.int64)[:, None]
    powers = alphabet_size ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (index // powers) % alphabet_size


def _gate_keys(codes: np.ndarray, tables: LetterTables) -> tuple[np.ndarray, np.ndarray]:
    """Packed keys of the letter gates and the inverse gates, each (n, p)."""
    p = codes.shape[1]
    m = p + 1
    occ = np.arange(1, p + 1, dtype=np.int32)
    generator = tables.generator[codes]
    # generator labels ascend with the occurrence, inverse labels descend
    letter = tables.ranks[codes] * m + np.where(generator, occ, m - occ)
    inverse = tables.inverse_ranks[codes] * m + np.where(generator, m - occ, occ)
    return letter, inverse


def linking_pairings(codes: np.ndarray, tables: LetterTables) -> np.ndarray:
    """dot(boundary phi_i, boundary phi_j) for every row and pair, shape (n, p, p).

    Half of an entry is the linking number; entries are always even.
    """
    letter, inverse = _gate_keys(codes, tables)
    start = inverse
    end = np.roll(letter, -1, axis=1)
    s1, e1 = start[:, :, None], end[:, :, None]
    s2, e2 = start[:, None, :], end[:, None, :]
    return np.sign(e2 - e1) - np.sign(s2 - e1) - np.sign(e2 - s1) + np.sign(s2 - s1)


def chord_signs(codes: np.ndarray, tables: LetterTables) -> np.ndarray:
    """Interleaving sign of chords i and j, from boundary positions only, shape (n, p, p)."""
    letter, inverse = _gate_keys(codes, tables)
    p = codes.shape[1]
    keys = np.concatenate([letter, inverse], axis=1)
    positions = np.argsort(np.argsort(keys, axis=1), axis=1)
    x = positions[:, p:]
    y = np.roll(positions[:, :p], -1, axis=1)
    x1, y1 = x[:, :, None], y[:, :, None]
    z, t = x[:, None, :], y[:, None, :]
    lo, hi = np.minimum(x1, y1), np.maximum(x1, y1)
    z_inside = (lo < z) & (z < hi)
    t_inside = (lo < t) & (t < hi)
    forward = np.where(x1 < y1, 1, -1)
    signs = np.where(z_inside, forward, -forward)
    return np.where(z_inside == t_inside, 0, signs)
