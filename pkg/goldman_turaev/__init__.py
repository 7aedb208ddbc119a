"""Goldman bracket and Turaev cobracket of loops on a genus-g surface with one boundary.

Loops are given as words in a_1, b_1, ..., a_g, b_g. Everything is computed from the
words alone: partitions of a word become chords of an arc diagram, their linking
numbers are read off the boundary order of the gates, and the bracket and cobracket
are sums over the nonzero linking numbers.
"""

from goldman_turaev.bialgebra import LinComb, TensorComb, bracket, bracket_words, cobracket
from goldman_turaev.bialgebra.operations import cobracket_word
from goldman_turaev.diagram import (
    Diagram,
    DiagramError,
    LinkingParityError,
    chord_sign_oracle,
    intersection_count,
    linking_matrix,
    lk_pair,
    lk_self,
)
from goldman_turaev.parser import WordSyntaxError, parse_cyclic_word, parse_word
from goldman_turaev.words import (
    CyclicWord,
    GenusMismatchError,
    Letter,
    Word,
    canonical_cyclic,
    cyclic_reduce,
    reduce,
)

__all__ = [
    "CyclicWord",
    "Diagram",
    "DiagramError",
    "GenusMismatchError",
    "Letter",
    "LinComb",
    "LinkingParityError",
    "TensorComb",
    "Word",
    "WordSyntaxError",
    "bracket",
    "bracket_words",
    "canonical_cyclic",
    "chord_sign_oracle",
    "cobracket",
    "cobracket_word",
    "cyclic_reduce",
    "intersection_count",
    "linking_matrix",
    "lk_pair",
    "lk_self",
    "parse_cyclic_word",
    "parse_word",
    "reduce",
]
