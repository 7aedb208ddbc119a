"""Seeded property-check suites behind `goldman-turaev check`.

Three suites are available:

    oracle      lk from the letter-level form against chord interleaving in the
                sorted diagram: exhaustively on short words through the array
                kernels in `batch`, then word by word on random words.
    invariance  the quotiented cobracket and the bracket are unchanged by rotation,
                conjugation and insertion of a cancelling pair.
    bialgebra   antisymmetry, Jacobi, co-Jacobi, compatibility and involutivity.

All randomness comes from one `random.Random(seed)`, so a run is reproducible.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from goldman_turaev import batch, constants
from goldman_turaev.bialgebra import checks
from goldman_turaev.diagram import (
    Diagram,
    Partition,
    Tag,
    chord_sign_oracle,
    interleaving_sign,
    linking_matrix,
    pair_linking_matrix,
)
from goldman_turaev.words import (
    CyclicWord,
    Family,
    Letter,
    Word,
    alphabet,
    canonical_cyclic,
)

logger = logging.getLogger(__name__)

# counterexamples kept per report
MAX_COUNTEREXAMPLES = 5


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, description: Callable[[], str]) -> None:
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            text = description()
            if not self.counterexamples:
                logger.warning("%s: first counterexample %s", self.suite, text)
            self.counterexamples.append(text)

    def record_many(self, ok: np.ndarray, description: Callable[[int, int], str]) -> None:
        """Record a (rows, checks) array of outcomes; `description` takes an index pair."""
        self.checked += int(ok.size)
        bad = np.argwhere(~ok)
        if not len(bad):
            return
        self.failures += len(bad)
        for row, column in bad[: MAX_COUNTEREXAMPLES - len(self.counterexamples)]:
            text = description(int(row), int(column))
            if not self.counterexamples:
                logger.warning("%s: first counterexample %s", self.suite, text)
            self.counterexamples.append(text)


def random_word(rng: random.Random, genus: int, max_len: int, min_len: int = 1) -> Word:
    letters = alphabet(genus)
    length = rng.randint(min_len, max_len)
    return Word(tuple(rng.choice(letters) for _ in range(length)), genus)


def oracle_letters(genus: int) -> tuple[Letter, ...]:
    """{a1, b1, a2} and inverses, or {a1, b1} and inverses in genus 1."""
    generators = [Letter(Family.A, 1), Letter(Family.B, 1)]
    if genus >= 2:
        generators.append(Letter(Family.A, 2))
    return tuple(x for g in generators for x in (g, g.inverse()))


def enumerate_words(
    letters: Sequence[Letter], genus: int, max_len: int, min_len: int = 1
) -> Iterator[Word]:
    """Every word over `letters` with length in min_len..max_len, shortest first."""
    for length in range(min_len, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            yield Word(combo, genus)


def enumerate_classes(genus: int, max_len: int) -> list[CyclicWord]:
    """Nontrivial conjugacy classes with a representative of length <= max_len."""
    classes = {
        cw
        for w in enumerate_words(alphabet(genus), genus, max_len)
        if not (cw := canonical_cyclic(w)).is_trivial
    }
    return sorted(classes, key=lambda cw: cw.sort_key)


def _check_word_against_oracle(w: Word, result: SuiteResult) -> list[list[int]]:
    d = Diagram.of_word(w)
    matrix = linking_matrix(w)
    ends = [tuple(d.position(g) for g in d.endpoints(part)) for part in d.partitions()]
    p = len(w)
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            value = matrix[i - 1][j - 1]
            expected = interleaving_sign(*ends[i - 1], *ends[j - 1])
            result.record(
                value == expected and value in (-1, 0, 1),
                lambda: f"lk({w}; {i}, {j}) = {value}, chords give {expected}",
            )
    return matrix


def _check_pair_against_oracle(v: Word, w: Word, result: SuiteResult) -> None:
    d = Diagram.of_pair(v, w)
    matrix = pair_linking_matrix(v, w)
    for i in range(1, len(v) + 1):
        for j in range(1, len(w) + 1):
            value = matrix[i - 1][j - 1]
            expected = chord_sign_oracle(d, Partition(Tag.FIRST, i), Partition(Tag.SECOND, j))
            result.record(
                value == expected and value in (-1, 0, 1),
                lambda: f"lk({v}, {i}; {w}, {j}) = {value}, chords give {expected}",
            )
    result.record(
        checks.check_pair_diagram_order(v, w),
        lambda: f"pair order of ({v}, {w}) depends on positions",
    )


def _check_batch_against_oracle(
    codes: np.ndarray, letters: Sequence[Letter], genus: int, result: SuiteResult
) -> None:
    tables = batch.letter_tables(letters)
    p = codes.shape[1]
    rows, cols = np.triu_indices(p, k=1)
    pairings = batch.linking_pairings(codes, tables)[:, rows, cols]
    expected = batch.chord_signs(codes, tables)[:, rows, cols]
    ok = (pairings % 2 == 0) & (np.abs(pairings) <= 2) & (pairings // 2 == expected)

    def describe(row: int, column: int) -> str:
        w = Word(tuple(letters[c] for c in codes[row]), genus)
        i, j = rows[column] + 1, cols[column] + 1
        return (
            f"lk({w}; {i}, {j}) = {pairings[row, column] / 2:g}, "
            f"chords give {expected[row, column]}"
        )

    result.record_many(ok, describe)


def _exhaustive_oracle_pass(
    letters: Sequence[Letter], genus: int, max_len: int, result: SuiteResult
) -> None:
    size = len(letters)
    for length in range(2, max_len + 1):
        total = size**length
        for start in range(0, total, constants.ORACLE_CHUNK_ROWS):
            stop = min(start + constants.ORACLE_CHUNK_ROWS, total)
            codes = batch.word_codes(size, length, start, stop)
            _check_batch_against_oracle(codes, letters, genus, result)
        logger.debug("oracle: all %d words of length %d done", total, length)


def run_oracle_suite(genus: int, seed: int, max_len: int, samples: int) -> SuiteResult:
    result = SuiteResult("oracle")
    rng = random.Random(seed)
    small_genus = min(genus, 2)
    _exhaustive_oracle_pass(oracle_letters(small_genus), small_genus, max_len, result)
    logger.info("oracle: %d comparisons after the exhaustive pass", result.checked)

    drawn = [random_word(rng, genus, constants.ORACLE_RANDOM_MAX_LEN) for _ in range(samples)]
    matrices = [_check_word_against_oracle(w, result) for w in drawn]
    # the array kernel must agree with linking_matrix on the drawn words
    letters = alphabet(genus)
    tables = batch.letter_tables(letters)
    by_length: dict[int, list[int]] = {}
    for n, w in enumerate(drawn):
        by_length.setdefault(len(w), []).append(n)
    for length in sorted(by_length):
        members = by_length[length]
        codes = batch.encode([drawn[n] for n in members], letters)
        halves = batch.linking_pairings(codes, tables) // 2
        for n, computed in zip(members, halves):
            result.record(
                computed.tolist() == matrices[n],
                lambda: f"array linking matrix of {drawn[n]} differs from linking_matrix",
            )

    for _ in range(samples):
        v = random_word(rng, genus, max_len)
        w = random_word(rng, genus, max_len)
        _check_pair_against_oracle(v, w, result)
    logger.info("oracle: %d comparisons, %d failures", result.checked, result.failures)
    return result


def run_invariance_suite(genus: int, seed: int, max_len: int, samples: int) -> SuiteResult:
    result = SuiteResult("invariance")
    rng = random.Random(seed)
    letters = alphabet(genus)
    for _ in range(samples):
        w = random_word(rng, genus, max_len)
        v = random_word(rng, genus, max_len)
        k = rng.randrange(len(w))
        m = rng.randrange(len(v))
        x = rng.choice(letters)
        position = rng.randint(0, len(w))
        result.record(
            checks.check_rotation_invariance(w, k),
            lambda: f"delta({w}) changes under rotation by {k}",
        )
        result.record(
            checks.check_conjugation_invariance(w, x),
            lambda: f"delta({w}) changes under conjugation by {x}",
        )
        result.record(
            checks.check_cancelling_insertion(w, position, x),
            lambda: f"delta({w}) changes when {x} {x.inverse()} is inserted at {position}",
        )
        result.record(
            checks.check_bracket_rotation_invariance(v, w, m, k),
            lambda: f"<{v}, {w}> changes under rotations {m}, {k}",
        )
        result.record(
            checks.check_bracket_conjugation_invariance(v, w, x),
            lambda: f"<{v}, {w}> changes under conjugation by {x}",
        )
    logger.info("invariance: %d checks, %d failures", result.checked, result.failures)
    return result


def _exhaustive_identities(
    genus: int, max_len: int, samples: int, rng: random.Random, result: SuiteResult
) -> None:
    classes = enumerate_classes(genus, max_len)
    for cw in classes:
        w = cw.word
        result.record(checks.check_cojacobi(w), lambda: f"co-Jacobi fails for {w}")
        result.record(checks.check_involutivity(w), lambda: f"<,> o delta({w}) != 0")

    # swapping arguments only flips signs, so unordered tuples cover every ordering
    for a, b in itertools.combinations_with_replacement(classes, 2):
        v, w = a.word, b.word
        result.record(checks.check_antisymmetry(v, w), lambda: f"<{v}, {w}> + <{w}, {v}> != 0")
        result.record(
            checks.check_compatibility(v, w),
            lambda: f"delta<{v}, {w}> != {v}.delta({w}) - {w}.delta({v})",
        )

    if genus == 1:
        triples = itertools.combinations_with_replacement(classes, 3)
    else:
        triples = (tuple(rng.choice(classes) for _ in range(3)) for _ in range(samples))
    for a, b, c in triples:
        u, v, w = a.word, b.word, c.word
        result.record(checks.check_jacobi(u, v, w), lambda: f"Jacobi fails for {u}, {v}, {w}")
    logger.info(
        "bialgebra: genus %d, %d classes of length <= %d done", genus, len(classes), max_len
    )


def run_bialgebra_suite(genus: int, seed: int, max_len: int, samples: int) -> SuiteResult:
    result = SuiteResult("bialgebra")
    rng = random.Random(seed)
    class_len = min(max_len, constants.BIALGEBRA_CLASS_MAX_LEN)
    for small_genus in range(1, min(genus, 2) + 1):
        _exhaustive_identities(small_genus, class_len, samples, rng, result)

    random_len = min(max_len, constants.BIALGEBRA_RANDOM_MAX_LEN)
    for _ in range(samples):
        u, v, w = (random_word(rng, genus, random_len) for _ in range(3))
        result.record(checks.check_jacobi(u, v, w), lambda: f"Jacobi fails for {u}, {v}, {w}")
        result.record(checks.check_antisymmetry(u, v), lambda: f"<{u}, {v}> + <{v}, {u}> != 0")
        result.record(
            checks.check_compatibility(u, w),
            lambda: f"delta<{u}, {w}> != {u}.delta({w}) - {w}.delta({u})",
        )
        result.record(checks.check_cojacobi(v), lambda: f"co-Jacobi fails for {v}")
    logger.info("bialgebra: %d checks, %d failures", result.checked, result.failures)
    return result


SUITES: dict[str, Callable[[int, int, int, int], SuiteResult]] = {
    "oracle": run_oracle_suite,
    "invariance": run_invariance_suite,
    "bialgebra": run_bialgebra_suite,
}


def run_suite(name: str, genus: int, seed: int, max_len: int, samples: int) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"Unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    logger.info(
        "Running %s suite: genus=%d seed=%d max_len=%d samples=%d",
        name, genus, seed, max_len, samples,
    )
    return suite(genus, seed, max_len, samples)
