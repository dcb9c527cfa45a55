import json
import subprocess
import sys

import pytest

from selim.cli import main

from cli_cases import CASES, DOCS, resolve


def run(argv, capsys):
    code = main(resolve(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, code, first", CASES, ids=lambda v: " ".join(v) if isinstance(v, list) else None)
def test_demo_documents(argv, code, first, capsys):
    got, out, err = run(argv, capsys)
    assert got == code, err
    if first is not None:
        assert out.splitlines()[0] == first
    if code:
        assert err.startswith("selim: ")
        assert out == ""


@pytest.mark.parametrize("argv, code, first", CASES)
def test_deterministic(argv, code, first, capsys):
    assert run(argv, capsys) == run(argv, capsys)


@pytest.mark.parametrize("argv", [c[0] for c in CASES if c[1] == 0])
def test_json_round_trip(argv, capsys):
    code, out, _ = run(argv + ["--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert "result" in doc
    source = json.loads((DOCS / next(a for a in argv if a.endswith(".json"))).read_text())
    assert doc["kind"] == source["kind"] and doc["payload"] == source["payload"]
    # the output is itself a valid input document and reproduces the same result
    from selim.documents import validate
    validate(doc)


def test_tmne_bound_from_player_count(capsys):
    code, out, _ = run(["bounds", "tmne", "--players", "5"], capsys)
    assert (code, out.strip()) == (0, "44")


def test_cross_check_table(capsys):
    code, out, _ = run(["bounds", "product", "semi_mixed.json", "--all"], capsys)
    assert code == 0
    assert out.count("13") >= 3


def test_schema_error_pointer(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "degree-matrix",
                               "payload": {"matrix": [[1, "x"]], "blocks": [1, 1]}}))
    code, _, err = run(["bounds", "product", str(bad)], capsys)
    assert code == 2
    assert "/payload/matrix/0/1" in err


def test_unknown_kind(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "nope", "payload": {}}')
    code, _, err = run(["bounds", "product", str(bad)], capsys)
    assert code == 2 and "/kind" in err


def test_invalid_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(["resultant", "sylvester", str(bad)], capsys)
    assert code == 2 and "invalid JSON" in err


def test_degenerate_game_is_a_verdict(tmp_path, capsys):
    doc = tmp_path / "ones.json"
    doc.write_text(json.dumps({"kind": "bilinear-triple",
                               "payload": {"a": [1] * 4, "b": [1] * 4, "c": [1] * 4}}))
    code, out, _ = run(["game", "solve", str(doc)], capsys)
    assert code == 0 and out.startswith("degenerate:")


def test_double_root_document_feeds_back(tmp_path, capsys):
    code, out, _ = run(["game", "double-root", "--seed", "4"], capsys)
    assert code == 0
    path = tmp_path / "double.json"
    path.write_text(out)
    code, out, _ = run(["game", "discriminant", str(path)], capsys)
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(["game", "solve", str(path)], capsys)
    assert "verdict: multiple root" in out


def test_missing_file(capsys):
    code, _, err = run(["bounds", "product", "/nonexistent/file.json"], capsys)
    assert code == 2


def test_stdin_and_entry_point():
    text = (DOCS / "three_lines.json").read_text()
    for cmd in (["selim"], [sys.executable, "-m", "selim.cli"]):
        proc = subprocess.run(cmd + ["resultant", "macaulay", "-"], input=text,
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == "-3"
