"""JSON documents emitted by the CLI.

Words are written with `format_word`; the trivial class is the empty string.
Every combination carries its genus so it can be parsed back.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from goldman_turaev.bialgebra.combinations import LinComb, TensorComb
from goldman_turaev.parser import parse_cyclic_word
from goldman_turaev.utils import format_word


class TermModel(BaseModel):
    """One term c·[word] of a combination of classes."""

    coeff: int = Field(description="Nonzero integer coefficient")
    word: str = Field(description="Canonical cyclic word; empty for the trivial class")


class LinCombModel(BaseModel):
    """Element of Z[pi-hat]."""

    genus: int = Field(description="Genus of the surface", ge=1)
    terms: list[TermModel] = Field(default_factory=list)

    @classmethod
    def from_lincomb(cls, x: LinComb) -> LinCombModel:
        return cls(
            genus=x.genus,
            terms=[TermModel(coeff=coeff, word=format_word(cw)) for cw, coeff in x.items()],
        )

    def to_lincomb(self) -> LinComb:
        return LinComb(
            [(parse_cyclic_word(term.word, self.genus), term.coeff) for term in self.terms],
            genus=self.genus,
        )


class TensorTermModel(BaseModel):
    """One term c·[left]⊗[right] (or c·[left]∧[right] in wedge mode)."""

    coeff: int = Field(description="Nonzero integer coefficient")
    left: str = Field(description="Left tensor factor")
    right: str = Field(description="Right tensor factor")


class TensorCombModel(BaseModel):
    """Element of Z[pi-hat] (x) Z[pi-hat]."""

    genus: int = Field(description="Genus of the surface", ge=1)
    mode: Literal["tensor", "wedge"] = Field(
        default="tensor",
        description="In wedge mode each term stands for c·(left⊗right - right⊗left)",
    )
    terms: list[TensorTermModel] = Field(default_factory=list)

    @classmethod
    def from_tensor(cls, t: TensorComb, wedge: bool = False) -> TensorCombModel:
        if wedge:
            triples = t.wedge_terms()
        else:
            triples = [(u, v, coeff) for (u, v), coeff in t.items()]
        return cls(
            genus=t.genus,
            mode="wedge" if wedge else "tensor",
            terms=[
                TensorTermModel(coeff=coeff, left=format_word(u), right=format_word(v))
                for u, v, coeff in triples
            ],
        )

    def to_tensor(self) -> TensorComb:
        total = TensorComb.zero(self.genus)
        for term in self.terms:
            u = parse_cyclic_word(term.left, self.genus)
            v = parse_cyclic_word(term.right, self.genus)
            if self.mode == "wedge":
                total = total + TensorComb.wedge(u, v, term.coeff)
            else:
                total = total + TensorComb({(u, v): term.coeff}, genus=self.genus)
        return total


class WordModel(BaseModel):
    """A word with its free reduction and conjugacy class."""

    genus: int = Field(ge=1)
    word: str = Field(description="The word as given")
    reduced: str = Field(description="Free reduction")
    canonical: str = Field(description="Canonical cyclic word of the conjugacy class")


class CrossingModel(BaseModel):
    i: int
    j: int
    sign: int


class LinkingModel(BaseModel):
    """Linking numbers of partitions: a single value or the whole matrix."""

    genus: int = Field(ge=1)
    words: list[str] = Field(description="One word, or the pair (v, w)")
    i: Optional[int] = Field(default=None, description="1-based partition index in the first word")
    j: Optional[int] = Field(default=None, description="1-based partition index in the last word")
    value: Optional[int] = Field(default=None, description="lk, one of -1, 0, 1")
    matrix: Optional[list[list[int]]] = Field(default=None)


class CheckReportModel(BaseModel):
    """Outcome of one property-check suite."""

    suite: str
    seed: int
    genus: int
    max_len: int
    samples: int
    checked: int = Field(description="Number of individual comparisons made")
    failures: int
    passed: bool
    counterexamples: list[str] = Field(default_factory=list)
