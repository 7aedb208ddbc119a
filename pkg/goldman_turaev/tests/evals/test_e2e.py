"""End-to-end runs of the command line through `main`."""

import json

import pytest

from goldman_turaev import constants
from goldman_turaev.bialgebra import cobracket_word
from goldman_turaev.cli import main
from goldman_turaev.parser import parse_word
from goldman_turaev.schemas import CheckReportModel, TensorCombModel

EXAMPLE = "a1 B1 a2 a1"

TEXT_CASES = [
    (["reduce", "-g", "2", "a1 A1 b1"], "b1"),
    (["canon", "-g", "2", "b1 a1"], "a1 b1"),
    (["reduce", "-g", "1", "a1 b1 B1 A1"], "[1]"),
    (["canon", "-g", "1", "A1 b1 a1"], "b1"),
    (["lk", "-g", "2", EXAMPLE, "1", "3"], "0"),
    (["lk", "-g", "2", EXAMPLE, "3", "4"], "-1"),
    (["lk", "-g", "2", "--pair", "a1", "b1", "1", "1"], "1"),
    (["lk", "-g", "2", EXAMPLE], " 0  0  0  0\n 0  0  0  1\n 0  0  0 -1\n 0 -1  1  0"),
    (["cobracket", "-g", "1", "a1"], "0"),
    (["bracket", "-g", "1", "a1", "b1"], "+1·[a1 b1]"),
    (["bracket", "-g", "1", "a1 b1", "a1 B1"], "-1·[a1 a1] + -1·[a1 b1 a1 b1^-1]"),
    (
        ["cobracket", "-g", "2", EXAMPLE, "--wedge"],
        "-1·[a1]∧[a1 b1^-1 a2] + -1·[a1 b1^-1]∧[a1 a2]",
    ),
    (
        ["cobracket", "-g", "2", EXAMPLE, "--terms"],
        "φ2 x φ4: +1 [a1 a2] [a1 b1^-1]\nφ3 x φ4: -1 [a1] [a1 b1^-1 a2]",
    ),
    (["bracket", "-g", "1", "a1", "a1", "--terms"], "no crossings"),
]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("argv, expected", TEXT_CASES)
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, argv)
    assert code == 0
    assert out == expected + "\n"


def test_cobracket_json_round_trips(capsys):
    code, out, _ = run(capsys, ["cobracket", "-g", "2", EXAMPLE, "--json"])
    assert code == 0
    model = TensorCombModel.model_validate_json(out)
    assert model.genus == 2
    assert model.to_tensor() == cobracket_word(parse_word(EXAMPLE, 2))


def test_reduce_json_adds_the_canonical_word(capsys):
    code, out, _ = run(capsys, ["reduce", "-g", "1", "A1 b1 B1 b1 a1", "--json"])
    assert code == 0
    assert json.loads(out) == {
        "genus": 1,
        "word": "a1^-1 b1 b1^-1 b1 a1",
        "reduced": "a1^-1 b1 a1",
        "canonical": "b1",
    }


def test_lk_json(capsys):
    code, out, _ = run(capsys, ["lk", "-g", "2", EXAMPLE, "3", "4", "--json"])
    assert code == 0
    document = json.loads(out)
    assert document["value"] == -1
    assert document["matrix"] is None


def test_check_suites_pass(capsys):
    code, out, _ = run(
        capsys,
        ["check", "oracle", "--seed", "7", "--max-len", "3", "-g", "3", "--samples", "5"],
    )
    assert code == 0
    assert out.startswith("PASS n=")
    code, out, _ = run(
        capsys,
        ["check", "bialgebra", "--seed", "7", "--max-len", "2", "-g", "1", "--samples", "2"],
    )
    assert code == 0
    assert out.startswith("PASS")


def test_check_report_json(capsys):
    argv = ["check", "invariance", "--seed", "5", "--max-len", "3", "--samples", "4", "--json"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    report = CheckReportModel.model_validate_json(out)
    assert report.passed
    assert report.checked == 20
    assert (report.suite, report.seed, report.samples) == ("invariance", 5, 4)


def test_output_is_deterministic(capsys):
    argv = ["check", "invariance", "--seed", "9", "--max-len", "4", "--samples", "6", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_diagram_formats(capsys):
    code, out, _ = run(capsys, ["diagram", "-g", "2", EXAMPLE, "--dot"])
    assert code == 0
    assert out.count('[label="') == 8 + 4
    code, out, _ = run(capsys, ["diagram", "-g", "2", "--pair", "a1 A2", "a1 B1 a2", "--svg"])
    assert code == 0
    assert out.count('class="gate"') == 10


def test_environment_genus(capsys, monkeypatch):
    monkeypatch.setenv(constants.ENV_GENUS, "2")
    code, out, _ = run(capsys, ["reduce", "a2 A2 b2"])
    assert (code, out) == (0, "b2\n")


@pytest.mark.parametrize(
    "argv, message",
    [
        (["reduce", "-g", "1", "a2"], "exceeds genus 1"),
        (["reduce", "-g", "1", "a1 ** b1"], "Empty token"),
        (["lk", "-g", "2", EXAMPLE, "2", "2"], "with itself"),
        (["lk", "-g", "2", EXAMPLE, "2"], "lk expects"),
        (["lk", "-g", "2", EXAMPLE, "one", "2"], "must be an integer"),
        (["diagram", "-g", "2", "--pair", "a1"], "expects 2 word"),
        (["cobracket", "-g", "0", "a1"], "at least 1"),
    ],
)
def test_errors_exit_with_code_two(capsys, argv, message):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert out == ""
    assert message in err


def test_usage_errors_exit_with_code_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["check", "everything"])
