import pytest
from hypothesis import given, settings

from goldman_turaev.diagram import (
    Chain0,
    Crossing,
    Diagram,
    DiagramError,
    Gate,
    Partition,
    Tag,
    boundary,
    chord_sign_oracle,
    dot,
    gate_compare,
    gate_key,
    interleaving_sign,
    intersection_count,
    intersections,
    linking_matrix,
    lk_pair,
    lk_self,
    pair_linking_matrix,
    self_intersections,
)
from goldman_turaev.parser import parse_word
from goldman_turaev.tests.strategies import words
from goldman_turaev.words import Family, GenusMismatchError, Letter, Word

A1 = Letter(Family.A, 1)
B1 = Letter(Family.B, 1)
A2 = Letter(Family.A, 2)

EXAMPLE_LABELS = ["a1", "a1", "b1", "a1^-1", "a1^-1", "b1^-1", "a2", "a2^-1"]
EXAMPLE_PAIR_LABELS = [
    "a1", "a1", "b1", "a1^-1", "a1^-1", "b1^-1", "a2", "a2", "a2^-1", "a2^-1",
]
EXAMPLE_MATRIX = [
    [0, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 0, -1],
    [0, -1, 1, 0],
]


def test_distinct_labels_follow_letter_rank():
    assert gate_compare(Gate(Tag.FIRST, 3, B1), Gate(Tag.FIRST, 1, A1.inverse())) == -1
    assert gate_compare(Gate(Tag.FIRST, 1, A2), Gate(Tag.SECOND, 9, B1.inverse())) == 1


def test_equal_labels_in_one_word():
    # generators ascend with the occurrence, inverses descend
    assert gate_compare(Gate(Tag.FIRST, 1, A1), Gate(Tag.FIRST, 4, A1)) == -1
    assert gate_compare(Gate(Tag.FIRST, 4, A1.inverse()), Gate(Tag.FIRST, 1, A1.inverse())) == -1
    g = Gate(Tag.FIRST, 2, B1)
    assert gate_compare(g, g) == 0


def test_equal_labels_in_two_words_ignore_positions():
    assert gate_compare(Gate(Tag.FIRST, 5, A1), Gate(Tag.SECOND, 1, A1)) == -1
    assert gate_compare(Gate(Tag.FIRST, 1, A1.inverse()), Gate(Tag.SECOND, 5, A1.inverse())) == 1


def test_single_word_gate_order(example_word):
    d = Diagram.of_word(example_word)
    assert d.labels() == EXAMPLE_LABELS
    assert [(g.occ, str(g.label)) for g in d.gates] == [
        (1, "a1"), (4, "a1"), (2, "b1"), (4, "a1^-1"),
        (1, "a1^-1"), (2, "b1^-1"), (3, "a2"), (3, "a2^-1"),
    ]


def test_pair_gate_order(example_pair):
    d = Diagram.of_pair(*example_pair)
    assert d.labels() == EXAMPLE_PAIR_LABELS
    a2_gates = [g for g in d.gates if g.label == A2]
    assert [g.tag for g in a2_gates] == [Tag.FIRST, Tag.SECOND]


def test_diagram_rejects_foreign_gates(example_word):
    d = Diagram.of_word(example_word)
    stranger = Gate(Tag.SECOND, 1, A1)
    assert stranger not in d
    with pytest.raises(DiagramError):
        d.position(stranger)
    with pytest.raises(DiagramError):
        d.compare(stranger, d.gates[0])
    assert d.compare(d.gates[0], d.gates[1]) == -1


def test_diagram_holds_one_or_two_words(example_word):
    with pytest.raises(DiagramError):
        Diagram((example_word,) * 3)
    with pytest.raises(GenusMismatchError):
        Diagram.of_pair(example_word, parse_word("a1", 1))
    with pytest.raises(DiagramError):
        Diagram.of_word(example_word).word(Tag.SECOND)


def test_partition_endpoints_and_boundary(example_word):
    d = Diagram.of_word(example_word)
    p = Partition(Tag.FIRST, 3)
    start, end = d.endpoints(p)
    assert start == Gate(Tag.FIRST, 3, A2.inverse())
    assert end == Gate(Tag.FIRST, 4, A1)
    assert boundary(p, d) == Chain0({end: 1, start: -1})
    # the last partition closes up onto the first letter
    assert d.endpoints(Partition(Tag.FIRST, 4))[1] == Gate(Tag.FIRST, 1, A1)
    with pytest.raises(DiagramError):
        d.endpoints(Partition(Tag.FIRST, 5))


def test_chain_arithmetic():
    g, h = Gate(Tag.FIRST, 1, A1), Gate(Tag.FIRST, 1, A1.inverse())
    c = Chain0({g: 2, h: -1})
    assert not (c - c)
    assert 2 * c == c + c
    assert (-c)[h] == 1
    assert Chain0([(g, 1), (g, -1)]) == Chain0()


def test_dot_is_alternating():
    g, h = Gate(Tag.FIRST, 1, A1), Gate(Tag.FIRST, 1, B1)
    x, y = Chain0({g: 1}), Chain0({h: 1})
    assert dot(x, y) == 1
    assert dot(y, x) == -1
    assert dot(x + y, x + y) == 0


def test_linking_numbers_of_the_example_word(example_word):
    assert lk_self(example_word, 1, 3) == 0
    assert lk_self(example_word, 3, 4) == -1
    assert lk_self(example_word, 4, 3) == 1
    assert lk_self(example_word, 2, 4) == 1
    assert linking_matrix(example_word) == EXAMPLE_MATRIX
    assert self_intersections(example_word) == [Crossing(2, 4, 1), Crossing(3, 4, -1)]


def test_lk_self_rejects_bad_indices(example_word):
    with pytest.raises(DiagramError):
        lk_self(example_word, 2, 2)
    with pytest.raises(DiagramError):
        lk_self(example_word, 1, 5)
    with pytest.raises(DiagramError):
        lk_self(Word.empty(2), 1, 2)


def test_lk_of_a_power():
    assert lk_self(parse_word("a1 a1", 1), 1, 2) == -1


def test_lk_pair_values():
    a1, b1, a1b1 = (parse_word(text, 1) for text in ("a1", "b1", "a1 b1"))
    assert lk_pair(a1, 1, b1, 1) == 1
    assert lk_pair(b1, 1, a1, 1) == -1
    # the tie-break between equal labels depends on which word comes first
    assert lk_pair(a1, 1, a1b1, 1) == 0
    assert lk_pair(a1b1, 1, a1, 1) == -1
    assert lk_pair(a1, 1, a1b1, 2) == 1


def test_intersections_of_a_pair():
    v, w = parse_word("a1", 2), parse_word("a1 B1 a2", 2)
    assert intersections(v, w) == [Crossing(1, 1, -1), Crossing(1, 2, -1), Crossing(1, 3, 1)]
    assert intersections(v, v) == []


def test_intersection_count_counts_crossings_of_the_representative(example_word):
    assert intersection_count(example_word) == 2
    assert intersection_count(parse_word("a1", 2), parse_word("a1 B1 a2", 2)) == 3
    assert intersection_count(Word.empty(2)) == 0


def test_oracle_rejects_a_chord_against_itself(example_word):
    d = Diagram.of_word(example_word)
    p = Partition(Tag.FIRST, 2)
    with pytest.raises(DiagramError):
        chord_sign_oracle(d, p, p)


def test_oracle_on_the_example_word(example_word):
    d = Diagram.of_word(example_word)
    parts = d.partitions()
    assert [
        chord_sign_oracle(d, parts[i], parts[j]) for i in range(4) for j in range(i + 1, 4)
    ] == [0, 0, 0, 0, 1, -1]


@given(words(genus=2, max_size=8))
def test_linking_matrix_is_antisymmetric_with_unit_entries(w):
    matrix = linking_matrix(w)
    p = len(w)
    for i in range(p):
        assert matrix[i][i] == 0
        for j in range(p):
            assert matrix[i][j] == -matrix[j][i]
            assert matrix[i][j] in (-1, 0, 1)


@given(words(genus=3, max_size=8))
def test_lk_matches_chord_interleaving(w):
    d = Diagram.of_word(w)
    for p in d.partitions():
        for q in d.partitions():
            if p != q:
                assert lk_self(w, p.index, q.index) == chord_sign_oracle(d, p, q)


@settings(max_examples=60)
@given(words(genus=2, max_size=5), words(genus=2, max_size=5))
def test_lk_pair_matches_chord_interleaving(v, w):
    d = Diagram.of_pair(v, w)
    for i in range(1, len(v) + 1):
        for j in range(1, len(w) + 1):
            expected = chord_sign_oracle(d, Partition(Tag.FIRST, i), Partition(Tag.SECOND, j))
            assert lk_pair(v, i, w, j) == expected


@settings(max_examples=60)
@given(words(genus=2, max_size=5), words(genus=2, max_size=5))
def test_gate_compare_is_a_strict_total_order(v, w):
    d = Diagram.of_pair(v, w)
    for a, g in enumerate(d.gates):
        for b, h in enumerate(d.gates):
            expected = (a > b) - (a < b)
            assert gate_compare(g, h) == expected
            assert gate_compare(h, g) == -expected


def test_gate_key_sorts_the_diagram(example_pair):
    d = Diagram.of_pair(*example_pair)
    assert list(d.gates) == sorted(d.gates, key=gate_key)
    assert gate_key(Gate(Tag.SECOND, 2, A1.inverse())) == (2, -1, -2)


def test_gate_compare_accepts_gates_of_any_word(example_word):
    d = Diagram.of_word(example_word)
    stranger = Gate(Tag.SECOND, 7, A2)
    assert gate_compare(stranger, d.gates[0]) == 1
    with pytest.raises(DiagramError):
        d.compare(stranger, d.gates[0])


def test_interleaving_sign():
    assert interleaving_sign(0, 2, 1, 3) == 1
    assert interleaving_sign(2, 0, 1, 3) == -1
    assert interleaving_sign(0, 2, 3, 1) == -1
    assert interleaving_sign(0, 3, 1, 2) == 0
    assert interleaving_sign(0, 1, 2, 3) == 0


@given(words(genus=2, max_size=8))
def test_linking_matrix_agrees_with_lk_self(w):
    matrix = linking_matrix(w)
    for i in range(1, len(w) + 1):
        for j in range(1, len(w) + 1):
            if i != j:
                assert matrix[i - 1][j - 1] == lk_self(w, i, j)


@settings(max_examples=60)
@given(words(genus=2, max_size=5), words(genus=2, max_size=5))
def test_pair_linking_matrix_agrees_with_lk_pair(v, w):
    matrix = pair_linking_matrix(v, w)
    assert len(matrix) == len(v)
    for i in range(1, len(v) + 1):
        assert [lk_pair(v, i, w, j) for j in range(1, len(w) + 1)] == matrix[i - 1]
