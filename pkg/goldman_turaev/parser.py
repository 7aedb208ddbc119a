"""Parse words written over the a/b generator alphabet.

Grammar, one line of tokens separated by whitespace, by `*`, or not separated at all:

    token := ("a" | "b") digits ["^-1"] | ("A" | "B") digits

The capitalized form is shorthand for the inverse, so "A1" and "a1^-1" are the same
letter. Parsing never reduces.
"""

import re
from typing import Generator

from goldman_turaev.words import CyclicWord, Family, Letter, Word, canonical_cyclic

_TOKEN = re.compile(r"([abAB])(\d+)(\^-1)?")
_SEPARATOR = "*"


class WordSyntaxError(ValueError):
    """Raised for text that does not follow the word grammar."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column + 1} in {text!r}")
        self.text = text
        self.column = column


def _tokens(text: str) -> Generator[tuple[int, re.Match[str]], None, None]:
    position = 0
    # a separator must be followed by a token
    pending_separator: int | None = None
    seen_token = False
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue
        if char == _SEPARATOR:
            if pending_separator is not None or not seen_token:
                raise WordSyntaxError("Empty token", text, position)
            pending_separator = position
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            end = position
            while end < len(text) and not text[end].isspace() and text[end] != _SEPARATOR:
                end += 1
            raise WordSyntaxError(f"Unknown token {text[position:end]!r}", text, position)
        yield position, match
        seen_token = True
        pending_separator = None
        position = match.end()
    if pending_separator is not None:
        raise WordSyntaxError("Empty token", text, pending_separator)


def _letter(text: str, column: int, match: re.Match[str], genus: int) -> Letter:
    symbol, digits, inverse_suffix = match.groups()
    if symbol.isupper() and inverse_suffix:
        raise WordSyntaxError(f"Unknown token {match.group(0)!r}", text, column)
    index = int(digits)
    if index == 0:
        raise WordSyntaxError("Handle index 0", text, column)
    if index > genus:
        raise WordSyntaxError(f"Handle index {index} exceeds genus {genus}", text, column)
    return Letter(
        Family(symbol.lower()),
        index,
        inverted=symbol.isupper() or inverse_suffix is not None,
    )


def parse_word(text: str, genus: int) -> Word:
    """Read a word; letters come out in textual order, unreduced.

    Examples:
        >>> str(parse_word("a1 B1 a2 a1", 2))
        'a1 b1^-1 a2 a1'
        >>> len(parse_word("", 1))
        0
        >>> len(parse_word("a1 A1", 1))
        2
    """
    if genus < 1:
        raise ValueError(f"Genus must be at least 1, got {genus}")
    letters = tuple(_letter(text, column, match, genus) for column, match in _tokens(text))
    return Word(letters, genus)


def parse_cyclic_word(text: str, genus: int) -> CyclicWord:
    """Read a word and return its conjugacy class."""
    return canonical_cyclic(parse_word(text, genus))
