"""Command-line front end: `goldman-turaev COMMAND [options]`.

Exit codes: 0 on success, 1 when a property-check suite finds a failure, 2 for usage
and parse errors. Indices of partitions are 1-based. Logs go to stderr; stdout only
carries results, so equal inputs and seeds give byte-identical output.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from goldman_turaev.bialgebra import (
    bracket_terms,
    bracket_words,
    cobracket_terms,
    cobracket_word,
    quotient_by_trivial,
)
from goldman_turaev.configuration import RunConfig
from goldman_turaev.diagram import (
    Diagram,
    linking_matrix,
    lk_pair,
    lk_self,
    pair_linking_matrix,
)
from goldman_turaev.export import to_dot, to_svg
from goldman_turaev.parser import parse_word
from goldman_turaev.schemas import (
    CheckReportModel,
    LinCombModel,
    LinkingModel,
    TensorCombModel,
    WordModel,
)
from goldman_turaev.suites import SUITES, run_suite
from goldman_turaev.utils import format_class, format_lincomb, format_tensor, format_word
from goldman_turaev.words import Word, canonical_cyclic, reduce

logger = logging.getLogger(__name__)

_LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--genus", type=int, default=None, help="genus of the surface")
    common.add_argument(
        "--json", dest="output", action="store_const", const="json", default=None,
        help="emit JSON instead of text",
    )
    common.add_argument("--wedge", action="store_true", help="print tensors as u∧v pairs")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="goldman-turaev",
        description="Goldman bracket and Turaev cobracket of words on a surface with boundary.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("reduce", "freely reduce a word"),
        ("canon", "canonical cyclic word of the conjugacy class"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("word")

    lk = commands.add_parser(
        "lk",
        parents=[common],
        help="linking numbers of partitions",
        description="WORD [I J], or --pair V W [I J]; without indices the whole matrix is printed.",
    )
    lk.add_argument("--pair", action="store_true", help="two words: V W [I J]")
    lk.add_argument("args", nargs="+", metavar="ARG")

    cob = commands.add_parser("cobracket", parents=[common], help="Turaev cobracket of a word")
    cob.add_argument("word")
    cob.add_argument("--raw", action="store_true", help="keep terms with a trivial factor")
    cob.add_argument("--terms", action="store_true", help="list the contribution of each crossing")

    br = commands.add_parser("bracket", parents=[common], help="Goldman bracket of two words")
    br.add_argument("first")
    br.add_argument("second")
    br.add_argument("--terms", action="store_true", help="list the contribution of each crossing")

    check = commands.add_parser("check", parents=[common], help="run a property-check suite")
    check.add_argument("suite", choices=sorted(SUITES))
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--max-len", dest="max_len", type=int, default=None)
    check.add_argument("--samples", type=int, default=None)

    diagram = commands.add_parser("diagram", parents=[common], help="draw the arc diagram")
    diagram.add_argument("--pair", action="store_true", help="draw the diagram of two words")
    diagram.add_argument("words", nargs="+", metavar="WORD")
    fmt = diagram.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--svg", dest="format", action="store_const", const="svg")
    diagram.set_defaults(format="dot")
    return parser


def _word_document(config: RunConfig, w: Word, text: str) -> str:
    if config.output != "json":
        return text
    return WordModel(
        genus=config.genus,
        word=format_word(w),
        reduced=format_word(reduce(w)),
        canonical=format_word(canonical_cyclic(w)),
    ).model_dump_json(indent=2)


def cmd_reduce(args: argparse.Namespace, config: RunConfig) -> str:
    w = parse_word(args.word, config.genus)
    return _word_document(config, w, format_word(reduce(w)) or "[1]")


def cmd_canon(args: argparse.Namespace, config: RunConfig) -> str:
    w = parse_word(args.word, config.genus)
    return _word_document(config, w, format_word(canonical_cyclic(w)) or "[1]")


def _index(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"Partition index must be an integer, got {text!r}") from None


def _format_matrix(matrix: list[list[int]]) -> str:
    return "\n".join(" ".join(f"{value:2d}" for value in row) for row in matrix)


def cmd_lk(args: argparse.Namespace, config: RunConfig) -> str:
    word_count = 2 if args.pair else 1
    if len(args.args) not in (word_count, word_count + 2):
        usage = "--pair V W [I J]" if args.pair else "WORD [I J]"
        raise ValueError(f"lk expects {usage}, got {len(args.args)} arguments")
    words = [parse_word(text, config.genus) for text in args.args[:word_count]]
    indices = [_index(text) for text in args.args[word_count:]]

    value: Optional[int] = None
    matrix: Optional[list[list[int]]] = None
    if args.pair:
        v, w = words
        if indices:
            value = lk_pair(v, indices[0], w, indices[1])
        else:
            matrix = pair_linking_matrix(v, w)
    else:
        (w,) = words
        if indices:
            value = lk_self(w, indices[0], indices[1])
        else:
            matrix = linking_matrix(w)

    if config.output == "json":
        return LinkingModel(
            genus=config.genus,
            words=[format_word(w) for w in words],
            i=indices[0] if indices else None,
            j=indices[1] if indices else None,
            value=value,
            matrix=matrix,
        ).model_dump_json(indent=2)
    return str(value) if value is not None else _format_matrix(matrix)


def cmd_cobracket(args: argparse.Namespace, config: RunConfig) -> str:
    w = parse_word(args.word, config.genus)
    if args.terms and config.output == "text":
        return "\n".join(
            f"φ{t.i} x φ{t.j}: {t.sign:+d} {format_class(t.left)} {format_class(t.right)}"
            for t in cobracket_terms(w)
        ) or "no crossings"
    result = cobracket_word(w)
    if not config.raw:
        result = quotient_by_trivial(result)
    if config.output == "json":
        return TensorCombModel.from_tensor(result, wedge=config.wedge).model_dump_json(indent=2)
    return format_tensor(result, wedge=config.wedge)


def cmd_bracket(args: argparse.Namespace, config: RunConfig) -> str:
    v = parse_word(args.first, config.genus)
    w = parse_word(args.second, config.genus)
    if args.terms and config.output == "text":
        return "\n".join(
            f"φ{t.i} x φ{t.j}: {t.sign:+d} {format_class(t.word)}" for t in bracket_terms(v, w)
        ) or "no crossings"
    result = bracket_words(v, w)
    if config.output == "json":
        return LinCombModel.from_lincomb(result).model_dump_json(indent=2)
    return format_lincomb(result)


def cmd_check(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    result = run_suite(args.suite, config.genus, config.seed, config.max_len, config.samples)
    code = 0 if result.passed else 1
    if config.output == "json":
        report = CheckReportModel(
            suite=result.suite,
            seed=config.seed,
            genus=config.genus,
            max_len=config.max_len,
            samples=config.samples,
            checked=result.checked,
            failures=result.failures,
            passed=result.passed,
            counterexamples=result.counterexamples,
        )
        return report.model_dump_json(indent=2), code
    if result.passed:
        return f"PASS n={result.checked}", code
    lines = [f"FAIL n={result.checked} failures={result.failures}"]
    lines.extend(f"  {text}" for text in result.counterexamples)
    return "\n".join(lines), code


def cmd_diagram(args: argparse.Namespace, config: RunConfig) -> str:
    expected = 2 if args.pair else 1
    if len(args.words) != expected:
        raise ValueError(f"diagram expects {expected} word(s), got {len(args.words)}")
    words = [parse_word(text, config.genus) for text in args.words]
    d = Diagram.of_pair(*words) if args.pair else Diagram.of_word(words[0])
    return (to_svg(d) if args.format == "svg" else to_dot(d)).rstrip("\n")


_COMMANDS = {
    "reduce": cmd_reduce,
    "canon": cmd_canon,
    "lk": cmd_lk,
    "cobracket": cmd_cobracket,
    "bracket": cmd_bracket,
    "check": cmd_check,
    "diagram": cmd_diagram,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=_LOG_LEVELS.get(args.verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    encoding = (getattr(sys.stdout, "encoding", None) or "").lower().replace("-", "")
    if encoding != "utf8" and hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    try:
        config = RunConfig.from_namespace(args)
        outcome = _COMMANDS[args.command](args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, code = outcome if isinstance(outcome, tuple) else (outcome, 0)
    print(text)
    return code
