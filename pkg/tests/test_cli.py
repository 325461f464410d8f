import json
import subprocess
import sys

import pytest

from wreathkit.cli import run

Z4_DOC = {"A": "Z2", "G": "Z4", "B": "Z2", "k": [0, 2], "f": [0, 1, 0, 1]}


@pytest.fixture
def z4_file(tmp_path):
    p = tmp_path / "z4.json"
    p.write_text(json.dumps(Z4_DOC))
    return str(p)


def test_embed_from_file(z4_file, capsys):
    code, report = run(["embed", "--extension", z4_file, "--section", "0"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["data"]["injective"] is True
    assert report.ok


def test_embed_broken_file(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"A": "Z2", "G": "Z4"}')
    code, report = run(["embed", "--extension", str(p)])
    assert code == 2 and report is None
    assert "input error" in capsys.readouterr().err


def test_embed_not_exact(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(dict(Z4_DOC, k=[0, 1])))
    assert run(["embed", "--extension", str(p)])[0] == 2


def test_section_out_of_range():
    assert run(["embed", "--extension", "z4", "--section", "9"])[0] == 2


def test_failing_check_exits_1(capsys):
    code, report = run(["group", "Z4", "--compare", "Z2"])
    capsys.readouterr()
    assert code == 1
    assert report.checks[-1].status == "fail"


def test_wreath_compare_d4(tmp_path, capsys):
    p = tmp_path / "d4.json"
    p.write_text(json.dumps({"permutations": [[1, 2, 3, 0], [0, 3, 2, 1]]}))
    code, report = run(["wreath", "--A", "Z2", "--B", "Z2", "--compare", str(p)])
    capsys.readouterr()
    assert code == 0 and report.data["wreath"]["order"] == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-universality", "--extension", "s3"],
        ["verify-universality", "--extension", "s3", "--target", "Z3"],
        ["beck-universal", "--module", "z3_inversion"],
        ["beck-universal", "--module", "z3_inversion", "--gamma", "[0, 2, 1]"],
        ["free-kernel", "--extension", "z4", "--maxlen", "4"],
        ["crude", "--extension", "z4"],
        ["lie-embed", "--extension", "aff1", "--degree", "3"],
        ["lie-embed", "--extension", "h3", "--degree", "3"],
    ],
)
def test_subcommands_pass(argv, capsys):
    code, report = run(argv)
    capsys.readouterr()
    assert code == 0, report.dumps()


def test_non_split_universality_is_input_error(capsys):
    assert run(["verify-universality", "--extension", "q8"])[0] == 2


def test_text_and_out(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _ = run(["crude", "--extension", "s3", "--text", "--out", str(out)])
    printed = capsys.readouterr().out
    assert code == 0 and "pass" in printed.lower()
    assert json.loads(out.read_text())["summary"]["fail"] == 0


def test_unknown_subcommand(capsys):
    assert run(["bogus"])[0] == 2


def test_module_entry_point(z4_file):
    proc = subprocess.run(
        [sys.executable, "-m", "wreathkit", "embed", "--extension", z4_file, "--section", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["data"]["injective"] is True
