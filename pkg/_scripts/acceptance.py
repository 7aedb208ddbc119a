"""Full-size acceptance runs with timings.

Runs the reference values, the gate orders of the two standard diagrams, and the
three property suites at their full bounds. Exits non-zero if anything fails.
"""

import argparse
import logging
import time

from goldman_turaev.bialgebra import LinComb, bracket_words, cobracket
from goldman_turaev.diagram import Diagram, lk_self
from goldman_turaev.parser import parse_word
from goldman_turaev.suites import run_suite
from goldman_turaev.utils import format_lincomb
from goldman_turaev.words import Family, Letter, Word

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

ORACLE_MAX_LEN = 8
ORACLE_SAMPLES = 10_000
INVARIANCE_SAMPLES = 10_000
INVARIANCE_MAX_LEN = 8
BIALGEBRA_SAMPLES = 1_000
# expected wall time of the full oracle run
ORACLE_TIME_LIMIT = 60.0


def reference_values() -> bool:
    start = time.perf_counter()
    w = parse_word("a1 B1 a2 a1", 2)
    ok = lk_self(w, 1, 3) == 0 and lk_self(w, 3, 4) == -1
    elapsed = time.perf_counter() - start
    logger.info(f"lk reference values: {'ok' if ok else 'WRONG'} in {elapsed * 1000:.3f} ms")

    single = Diagram.of_word(w).labels()
    pair = Diagram.of_pair(parse_word("a1 A2", 2), parse_word("a1 B1 a2", 2)).labels()
    logger.info(f"single-word gate order: {' '.join(single)}")
    logger.info(f"pair gate order: {' '.join(pair)}")

    a1 = Letter(Family.A, 1)
    powers = all(
        not cobracket(LinComb.from_word(Word((a1,) * n, 1))) for n in range(1, 5)
    )
    generators = format_lincomb(bracket_words(parse_word("a1", 1), parse_word("b1", 1)))
    logger.info(f"delta(a1^n) = 0 for n <= 4: {powers}; <a1, b1> = {generators}")
    return ok and powers and generators == "+1·[a1 b1]"


def timed_suite(
    name: str, genus: int, seed: int, max_len: int, samples: int, limit: float | None = None
) -> bool:
    start = time.perf_counter()
    result = run_suite(name, genus, seed, max_len, samples)
    elapsed = time.perf_counter() - start
    status = "PASS" if result.passed else "FAIL"
    logger.info(f"{name}: {status} n={result.checked} in {elapsed:.1f} s")
    for text in result.counterexamples:
        logger.error(f"  {text}")
    if limit is not None and elapsed > limit:
        logger.warning(f"{name}: took {elapsed:.1f} s, expected under {limit:.0f} s")
    return result.passed


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="shrink every bound by 10x")
    args = parser.parse_args()
    scale = 10 if args.quick else 1

    outcomes = [
        reference_values(),
        timed_suite(
            "oracle",
            3,
            args.seed,
            ORACLE_MAX_LEN - (2 if args.quick else 0),
            ORACLE_SAMPLES // scale,
            limit=ORACLE_TIME_LIMIT,
        ),
        timed_suite("invariance", 3, args.seed, INVARIANCE_MAX_LEN, INVARIANCE_SAMPLES // scale),
        timed_suite("bialgebra", 2, args.seed, 5, BIALGEBRA_SAMPLES // scale),
    ]
    raise SystemExit(0 if all(outcomes) else 1)
