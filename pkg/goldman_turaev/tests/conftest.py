import pytest
from hypothesis import settings

from goldman_turaev.parser import parse_word
from goldman_turaev.words import Word

# exact arithmetic on long words has no useful time bound
settings.register_profile("goldman-turaev", deadline=None)
settings.load_profile("goldman-turaev")


@pytest.fixture
def example_word() -> Word:
    """The four-letter word a1 b1^-1 a2 a1 of genus 2 used throughout the tests."""
    return parse_word("a1 B1 a2 a1", 2)


@pytest.fixture
def example_pair() -> tuple[Word, Word]:
    return parse_word("a1 A2", 2), parse_word("a1 B1 a2", 2)
