import json

import pytest

from sepscope.cli import main
from sepscope.graphs import parse_edge_list


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_gen_writes_round_trippable_files(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "gen", "skinny-ladder", "--k", "3")
    assert code == 0
    assert "9 vertices" in out
    g = parse_edge_list((tmp_path / "skinny_ladder_k3.el").read_text())
    assert g.n == 9 and g.m == 10
    sidecar = json.loads((tmp_path / "skinny_ladder_k3.witness.json").read_text())
    assert sidecar["verified"] is True
    assert "S" in sidecar["roles"]


def test_gen_honors_out_and_lengths(tmp_path, capsys):
    stem = str(tmp_path / "t4")
    code, _, _ = run(capsys, "gen", "theta", "--k", "4", "--len", "4,4,4,4",
                     "--out", stem)
    assert code == 0
    g = parse_edge_list((tmp_path / "t4.el").read_text())
    assert g.n == 10


def test_gen_unknown_family_errors(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "moebius", "--k", "3")
    assert code == 2
    assert "unknown family" in err


def test_gen_bad_params_error_cleanly(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "gen", "theta", "--k", "3", "--len", "3,4,4")
    assert code == 2 and "4" in err
    code, _, err = run(capsys, "gen", "theta", "--k", "3", "--len", "a,b")
    assert code == 2


def test_enum_oracle_p4(tmp_path, capsys):
    el = write(tmp_path, "p4.el", "4 3\n0 1\n1 2\n2 3\n")
    doc = run_json(capsys, "enum", el, "--algo", "oracle")
    assert doc["results"]["count"] == 2
    assert doc["complete"] is True
    assert doc["results"]["separators"] == [[1], [2]]


def test_enum_closure_c5(tmp_path, capsys):
    el = write(tmp_path, "c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    doc = run_json(capsys, "enum", el, "--algo", "closure")
    assert doc["results"]["count"] == 5


def test_enum_branching_reports_raw_and_filtered(tmp_path, capsys):
    el = write(tmp_path, "p4.el", "4 3\n0 1\n1 2\n2 3\n")
    doc = run_json(capsys, "enum", el, "--algo", "branching", "--k", "2")
    r = doc["results"]
    assert r["filtered_count"] == 2
    assert r["raw_count"] >= r["filtered_count"]


def test_enum_branching_needs_k(tmp_path, capsys):
    el = write(tmp_path, "p4.el", "4 3\n0 1\n1 2\n2 3\n")
    code, _, err = run(capsys, "enum", el, "--algo", "branching")
    assert code == 2 and "--k" in err


def test_enum_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "enum", str(tmp_path / "nope.el"))
    assert code == 2 and "no such file" in err


def test_enum_parse_error(tmp_path, capsys):
    el = write(tmp_path, "bad.el", "2 1\n0 7\n")
    code, _, err = run(capsys, "enum", el)
    assert code == 2


def test_detect_outcomes_are_exit_zero(tmp_path, capsys):
    tree = write(tmp_path, "tree.el", "7 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6\n")
    doc = run_json(capsys, "detect", "cycle", tree, "--r", "4")
    assert doc["results"]["status"] == "absent_exhaustive"
    c6 = write(tmp_path, "c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    k3 = write(tmp_path, "k3.el", "3 3\n0 1\n0 2\n1 2\n")
    doc = run_json(capsys, "detect", "minor", c6, k3)
    assert doc["results"]["status"] == "found"
    assert doc["results"]["witness"]["branch_sets"]
    doc = run_json(capsys, "detect", "subgraph", c6, k3)
    assert doc["results"]["status"] == "absent_exhaustive"


def test_detect_creature_on_p4(tmp_path, capsys):
    p4 = write(tmp_path, "p4.el", "4 3\n0 1\n1 2\n2 3\n")
    doc = run_json(capsys, "detect", "creature", p4, "--k", "1")
    assert doc["results"]["status"] == "found"
    assert doc["results"]["witness"]["order"] == 1


def test_detect_budget_env_override(tmp_path, capsys, monkeypatch):
    p4 = write(tmp_path, "p4.el", "4 3\n0 1\n1 2\n2 3\n")
    monkeypatch.setenv("SEPSCOPE_BUDGET", "1")
    doc = run_json(capsys, "detect", "creature", p4, "--k", "1")
    assert doc["results"]["status"] == "unknown_budget"
    assert doc["complete"] is False
    # explicit flag beats the environment
    doc = run_json(capsys, "detect", "creature", p4, "--k", "1",
                   "--budget", "100000")
    assert doc["results"]["status"] == "found"


def test_detect_needs_pattern(tmp_path, capsys):
    c6 = write(tmp_path, "c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    code, _, err = run(capsys, "detect", "subgraph", c6)
    assert code == 2 and "pattern" in err


def test_classify_p3_directory(tmp_path, capsys):
    d = tmp_path / "fam"
    d.mkdir()
    (d / "p3.el").write_text("3 2\n0 1\n1 2\n")
    doc = run_json(capsys, "classify", str(d))
    assert doc["results"]["status"] == "strongly_quasi_tame"
    assert doc["complete"] is True


def test_classify_empty_directory_errors(tmp_path, capsys):
    d = tmp_path / "fam"
    d.mkdir()
    code, _, err = run(capsys, "classify", str(d))
    assert code == 2 and "no edge-list" in err


def test_verify_single_criterion(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--filter", "3")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 1 and lines[0].startswith("PASS  criterion 3")


def test_verify_unknown_filter(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--filter", "zebra")
    assert code == 2


def test_stable_output_is_byte_identical(tmp_path, capsys):
    el = write(tmp_path, "c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    _, out1, _ = run(capsys, "enum", el, "--algo", "closure", "--stable-output")
    _, out2, _ = run(capsys, "enum", el, "--algo", "closure", "--stable-output")
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["elapsed_ms"] == 0


def test_out_writes_report_file(tmp_path, capsys):
    el = write(tmp_path, "c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "enum", el, "--out", str(target))
    assert code == 0
    assert out == ""  # report went to the file, not stdout
    doc = json.loads(target.read_text())
    assert doc["results"]["count"] == 5
    assert el in doc["inputs"]
