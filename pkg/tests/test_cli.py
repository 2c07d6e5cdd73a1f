import csv
import io
import json

import pytest

from kostka_shoji.cli import RunConfig, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_kostka_example():
    code, text = run("kostka", "--r", "1", "--n", "2", "--lambda", "2,0", "--mu", "1,1")
    assert code == 0 and text == "t\n"


def test_kostka_json_and_csv():
    code, text = run("kostka", "--r", "2", "--lambda", "1|0", "--mu", "0|1", "--json")
    assert json.loads(text) == {"lambda": "1|0", "mu": "0|1", "poly": [{"t": [1, 0], "c": 1}],
                                "dominant": True}
    code, text = run("kostka", "--r", "2", "--lambda", "1|0", "--mu", "0|1", "--csv")
    assert text.splitlines() == ["lambda,mu,poly", "1|0,0|1,t1"]


def test_kostka_single_and_pad_compare():
    code, text = run("kostka", "--r", "2", "--lambda", "2|0", "--mu", "0|2", "--single", "--pad-compare")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "t^2"
    assert lines[1].startswith("N=2: ")


def test_non_dominant_pair_is_computed():
    code, text = run("kostka", "--r", "2", "--lambda", "0|1", "--mu", "1|0")
    assert code == 0 and text == "0\n"


@pytest.mark.parametrize("argv", [
    ["kostka", "--r", "1", "--lambda", "2,0"],
    ["kostka", "--r", "2", "--lambda", "2,0", "--mu", "1,1"],
    ["kostka", "--r", "1", "--lambda", "2,0", "--mu", "1,0"],
    ["kostka", "--r", "1", "--lambda", "1,2", "--mu", "2,1"],
    ["table", "--r", "1", "--size", "2", "--threads", "0"],
    ["table", "--r", "1", "--size", "-1"],
    ["verify", "--suite", "cor33"],
    ["words", "--r", "2", "--i", "1,2"],
    ["words", "--r", "2", "--standard-flag", "2", "--dims", "1,1"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_table_total0():
    code, text = run("table", "--r", "2", "--size", "0")
    rows = json.loads(text)
    assert code == 0 and len(rows) == 1 and rows[0]["poly"] == [{"t": [0, 0], "c": 1}]


def test_table_csv(tmp_path):
    path = tmp_path / "t.csv"
    assert run("table", "--r", "1", "--size", "2", "--out", str(path))[0] == 0
    rows = list(csv.reader(path.read_text().splitlines()))
    assert rows == [["lambda", "mu", "poly"], ["1,1", "1,1", "1"], ["2,0", "1,1", "t"], ["2,0", "2,0", "1"]]


def test_table_threads_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("table", "--r", "2", "--size", "3", "--out", str(a), "--threads", "1")
    run("table", "--r", "2", "--size", "3", "--out", str(b), "--threads", "3")
    assert a.read_bytes() == b.read_bytes()


def test_pseudoroots_csv():
    code, text = run("pseudoroots", "--r", "2", "--n", "2")
    assert text.splitlines() == ["m,n,color,alpha", "1,2,1,1 0 0", "1,4,1,1 1 1", "2,3,2,0 1 0",
                                 "3,4,1,0 0 1"]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "lemma31", "--max", "1"],
    ["verify", "--suite", "charge", "--size", "4"],
    ["verify", "--suite", "lemma32", "--r", "2", "--n", "2", "--box", "2"],
    ["verify", "--suite", "cor33", "--r", "2", "--mu", "1,0|0,0", "--max-degree", "2"],
    ["verify", "--suite", "triangularity", "--max-r", "2", "--size", "3"],
    ["verify", "--suite", "positivity", "--max-r", "2", "--size", "3"],
    ["verify", "--suite", "specialization", "--max-r", "2", "--size", "3"],
    ["verify", "--suite", "words", "--count", "5", "--seed", "3"],
])
def test_verify_suites_pass(argv):
    code, text = run(*argv)
    assert code == 0, text
    assert text.startswith("[PASS]")
    assert "seed:" in text


def test_verify_lemma31_reports_printed_form_mismatch():
    code, text = run("verify", "--suite", "lemma31", "--max", "3")
    assert code == 0
    assert "disagree" in text


def test_words_output():
    code, text = run("words", "--r", "2", "--standard-flag", "2", "--json", "--verify")
    data = json.loads(text)
    assert code == 0
    assert data["total_length"] == 8
    assert [b["n"] for b in data["blocks"]] == [4, 3, 2, 1]
    code, text = run("words", "--r", "2", "--i", "1,2", "--a", "1,1", "--verify")
    assert code == 0 and "reduced=True" in text


def test_words_arc_error_exit_1():
    code, text = run("words", "--r", "4", "--i", "4,3", "--a", "3,1")
    assert code == 1 and "covers every residue" in text


def test_version(capsys):
    assert main(["--version"]) == 0
    out = capsys.readouterr().out
    assert "orientation 'inverted'" in out
    assert "D(u+r) = D(u)+d" in out


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("table", {"threads": 0})
    with pytest.raises(ValueError):
        RunConfig("verify", {"max_degree": -1})
    assert RunConfig("table", {"threads": 2}).seed == 20180125
