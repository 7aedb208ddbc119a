"""Shared text formatting used by the CLI and by `repr`.

Functions:
    format_word: Render a word or cyclic word, "[1]" for the trivial class when bracketed.
    format_lincomb: Render a combination of classes as "+c·[word] + -c·[word] + ...".
    format_tensor: Render a tensor combination, optionally as wedges.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from goldman_turaev.words import CyclicWord, Word

if TYPE_CHECKING:
    from goldman_turaev.bialgebra.combinations import FreeModuleElement, LinComb, TensorComb


def format_word(w: Word | CyclicWord) -> str:
    """Lowercase letters with ^-1 suffixes, space-separated; "" for the empty word.

    Examples:
        >>> from goldman_turaev.parser import parse_word
        >>> format_word(parse_word("a1 B1", 1))
        'a1 b1^-1'
    """
    return " ".join(str(x) for x in w.letters)


def format_class(cw: CyclicWord) -> str:
    return f"[{format_word(cw) or '1'}]"


def _join(terms: list[str]) -> str:
    return " + ".join(terms) if terms else "0"


def format_lincomb(x: LinComb) -> str:
    """Terms sorted by canonical word, "±c·[word]" terms joined by " + "; "0" if empty.

    Examples:
        >>> from goldman_turaev.parser import parse_cyclic_word
        >>> from goldman_turaev.bialgebra import LinComb
        >>> format_lincomb(LinComb.basis(parse_cyclic_word("b1 a1", 1)))
        '+1·[a1 b1]'
    """
    return _join([f"{coeff:+d}·{format_class(cw)}" for cw, coeff in x.items()])


def format_tensor(t: TensorComb, wedge: bool = False) -> str:
    if not wedge:
        return format_combination(t)
    return _join(
        [
            f"{coeff:+d}·{format_class(u)}∧{format_class(v)}"
            for u, v, coeff in t.wedge_terms()
        ]
    )


def format_combination(x: FreeModuleElement) -> str:
    """Any combination; tuple keys are joined with ⊗."""
    terms = []
    for key, coeff in x.items():
        words = key if isinstance(key, tuple) else (key,)
        terms.append(f"{coeff:+d}·{'⊗'.join(format_class(cw) for cw in words)}")
    return _join(terms)
