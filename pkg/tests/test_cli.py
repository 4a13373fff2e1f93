"""Tests for the command-line interface."""

import json
import subprocess
import sys

import pytest

from qalt.cli import _COMMANDS, main
from qalt.hecke_rep import IndeterminateRankError


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_example(capsys):
    code, out, err = run(capsys, "dim", "--n", "4", "--q", "2")
    assert code == 0
    assert json.loads(out) == {
        "even_words": 12, "rank": 12, "expected": 12, "pass": True}


def test_output_is_byte_identical(capsys):
    _, first, _ = run(capsys, "classify", "--n", "4", "--q", "3/2")
    _, second, _ = run(capsys, "classify", "--n", "4", "--q", "3/2")
    assert first == second
    _, third, _ = run(capsys, "verify", "--n", "4", "--q", "2", "--seed", "3")
    _, fourth, _ = run(capsys, "verify", "--n", "4", "--q", "2", "--seed", "3")
    assert third == fourth


def test_rewrite_cubic(capsys):
    code, out, _ = run(capsys, "rewrite", "--n", "4", "--word", "y1 y1 y1")
    assert code == 0
    data = json.loads(out)
    assert data["input_word"] == [1, 1, 1]
    terms = {tuple(t["word"]): t["coeff"] for t in data["terms"]}
    assert terms[()] == {"num": "1", "den": "1"}
    assert terms[(1,)] == {"num": "q^2 - 2*q + 1", "den": "q^2 + 2*q + 1"}
    assert terms[(1, 1)] == {"num": "-q^2 + 2*q - 1", "den": "q^2 + 2*q + 1"}


def test_rewrite_with_q_value(capsys):
    code, out, _ = run(capsys, "rewrite", "--n", "4", "--word", "y1 y1 y1",
                       "--q", "3/2")
    assert code == 0
    data = json.loads(out)
    assert data["q"] == "3/2"
    values = {tuple(t["word"]): t["value"] for t in data["terms"]}
    assert values == {(): "1", (1,): "1/25", (1, 1): "-1/25"}


def test_classify_n3(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--q", "2")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"n", "q", "labels", "equivalences", "checks"}
    assert data["checks"] == {"sum_dim_sq": 3, "pass": True}
    assert len(data["labels"]) == 3


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "--n", "4")
    data = json.loads(out)
    assert code == 0
    assert data["sum_count_sq"] == 24
    assert [s["shape"] for s in data["shapes"]] == \
        ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    code, out, _ = run(capsys, "tableaux", "--shape", "3,1")
    data = json.loads(out)
    assert data["count"] == 3
    assert data["tableaux"] == ["1,3,4/2", "1,2,4/3", "1,2,3/4"]


def test_rep_output(capsys):
    code, out, _ = run(capsys, "rep", "--shape", "2,1", "--q", "2")
    data = json.loads(out)
    assert code == 0
    assert data["basis"] == ["1,3/2", "1,2/3"]
    assert data["q"] == "2"
    # 17 significant digits, so 5/9 prints with its full double expansion
    assert "0.55555555555555558" in out
    f2 = data["generator_matrices"][1]
    assert abs(f2[0][0]["re"] - 5.0 / 9.0) < 1e-15


def test_verify_with_word_checks(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--q", "3/2",
                       "--seed", "11")
    data = json.loads(out)
    assert code == 0
    assert data["pass"] is True
    assert data["word_checks"]["pass"] is True
    assert data["word_checks"]["samples"] == 20


def test_verify_failure_exits_two(capsys):
    code, out, err = run(capsys, "verify", "--n", "3", "--q", "2",
                         "--tol", "1e-20")
    assert code == 2
    assert "verification failed" in err
    assert json.loads(out)["pass"] is False


def test_induce_table(capsys):
    code, out, _ = run(capsys, "induce", "--n", "3", "--q", "2")
    data = json.loads(out)
    assert code == 0
    assert data["pass"] is True
    assert len(data["rows"]) == 3
    code, out, _ = run(capsys, "induce", "--n", "4", "--q", "2",
                       "--label", "2,2:plus")
    data = json.loads(out)
    assert data["multiplicities"]["2,2"] == 1


def test_symmetry_report(capsys):
    code, out, _ = run(capsys, "symmetry", "--shape", "3,1", "--q", "2")
    data = json.loads(out)
    assert code == 0
    assert data["pass"] is True
    for entry in data["generators"]:
        assert entry["max_abs_deviation"] < 1e-10


def test_text_output(capsys):
    code, out, _ = run(capsys, "dim", "--n", "4", "--q", "2",
                       "--output", "text")
    assert code == 0
    assert "pass: true" in out
    assert "{" not in out


def test_invalid_inputs_exit_one(capsys):
    cases = [
        ("rep", "--shape", "2,1", "--q", "0"),
        ("rep", "--shape", "2,1", "--q", "-1"),
        ("rep", "--shape", "2,1", "--q", "bogus"),
        ("dim", "--n", "12"),
        ("dim", "--n", "1"),
        ("rewrite", "--n", "4", "--word", "y9"),
        ("rewrite", "--n", "4", "--word", "hello"),
        ("classify", "--n", "2"),
        ("nonsense",),
        ("rep", "--shape", "2;1"),
        ("induce", "--n", "3", "--q", "2", "--label", "9"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 1, argv
        assert err.strip(), argv


def test_cap_override(capsys):
    code, out, _ = run(capsys, "tableaux", "--n", "9", "--max-n", "9")
    assert code == 0
    assert json.loads(out)["n"] == 9


def test_indeterminate_rank_exits_three(capsys, monkeypatch):
    def explode(args):
        raise IndeterminateRankError("no spectral gap at the cutoff")

    monkeypatch.setitem(_COMMANDS, "dim", explode)
    code, out, err = run(capsys, "dim", "--n", "4", "--q", "2")
    assert code == 3
    assert "indeterminate" in err


def test_missing_required_flag(capsys):
    code, _, err = run(capsys, "rewrite", "--n", "4")
    assert code == 1
    assert err.strip()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qalt.cli", "dim", "--n", "4", "--q", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
