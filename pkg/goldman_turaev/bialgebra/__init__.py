"""Goldman-Turaev Lie bialgebra on cyclic words.

This package computes the Turaev cobracket and the Goldman bracket of free homotopy
classes of loops on a genus-g surface with one boundary component, purely from
words, using linking numbers of word partitions.

The main components are:

1. `combinations`: exact integer combinations of cyclic words (`LinComb`), of pairs
   (`TensorComb`) and of triples (`TripleComb`).
2. `operations`: the cobracket of a word, the bracket of two words, their linear
   extensions, and the quotient by the trivial class.
3. `checks`: well-definedness (rotation, conjugation, cancelling pairs) and the
   Lie bialgebra identities (antisymmetry, Jacobi, co-Jacobi, compatibility,
   involutivity) as boolean checkers.

Cobracket values are reported in Z[pi-hat]/Z1 unless the raw tensor is requested;
bracket values live in Z[pi-hat] with the trivial class kept.
"""  # noqa

from goldman_turaev.bialgebra.checks import (
    check_antisymmetry,
    check_bracket_conjugation_invariance,
    check_bracket_rotation_invariance,
    check_cancelling_insertion,
    check_cojacobi,
    check_compatibility,
    check_conjugation_invariance,
    check_involutivity,
    check_jacobi,
    check_pair_diagram_order,
    check_rotation_invariance,
)
from goldman_turaev.bialgebra.combinations import LinComb, TensorComb, TripleComb, tensor
from goldman_turaev.bialgebra.operations import (
    BracketTerm,
    CobracketTerm,
    act,
    bracket,
    bracket_of_tensor,
    bracket_terms,
    bracket_words,
    cobracket,
    cobracket_left,
    cobracket_terms,
    cobracket_word,
    quotient_by_trivial,
)

__all__ = [
    "BracketTerm",
    "CobracketTerm",
    "LinComb",
    "TensorComb",
    "TripleComb",
    "act",
    "bracket",
    "bracket_of_tensor",
    "bracket_terms",
    "bracket_words",
    "check_antisymmetry",
    "check_bracket_conjugation_invariance",
    "check_bracket_rotation_invariance",
    "check_cancelling_insertion",
    "check_cojacobi",
    "check_compatibility",
    "check_conjugation_invariance",
    "check_involutivity",
    "check_jacobi",
    "check_pair_diagram_order",
    "check_rotation_invariance",
    "cobracket",
    "cobracket_left",
    "cobracket_terms",
    "cobracket_word",
    "quotient_by_trivial",
    "tensor",
]
