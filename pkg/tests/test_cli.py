import json
import subprocess
import sys

import pytest

from gnsatoms.cli import main, parse_point, parse_points, UsageError
from gnsatoms.core import GapSet
from gnsatoms.fixtures import CORNER_43
from gnsatoms.theorems import REGISTRY


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_point_parsing():
    assert parse_point("3,2") == (3, 2)
    assert parse_points("2,2; 3,3") == [(2, 2), (3, 3)]
    assert parse_points("") == []
    with pytest.raises(UsageError):
        parse_point("a,b")
    with pytest.raises(UsageError):
        parse_point("-1,2")


def test_analyze_inline(capsys):
    code, out, _ = run(capsys, "analyze", "--gaps", "0,1;1,0;1,1;1,2;3,0")
    doc = json.loads(out)
    assert code == 0
    assert doc["corner"] == [4, 3] and doc["ceh"] == [[0, 1], [1, 1]]


def test_analyze_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "corner_43.json"
    path.write_text(CORNER_43.to_json())
    code, from_file, _ = run(capsys, "analyze", str(path))
    assert code == 0
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(CORNER_43.to_json()))
    code, from_stdin, _ = run(capsys, "analyze", "-")
    assert from_stdin == from_file


def test_analyze_empty_gap_set(capsys):
    code, out, _ = run(capsys, "analyze", "--gaps", "", "--d", "2")
    doc = json.loads(out)
    assert code == 0 and doc["genus"] == 0 and doc["corner"] == [0, 0]


def test_analyze_invalid_reports_decomposition(capsys):
    code, out, err = run(capsys, "analyze", "--gaps", "1,1")
    assert code == 2 and out == ""
    assert "(1, 1) = " in err and "(1, 0)" in err and "(0, 1)" in err


def test_analyze_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 1
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 1
    dup = tmp_path / "dup.json"
    dup.write_text('{"d": 1, "gaps": [[1], [1]]}')
    assert run(capsys, "analyze", str(dup))[0] == 1


def test_analyze_plot(tmp_path, capsys):
    svg = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "analyze", "--gaps", "0,1;1,0;1,1;1,2;3,0", "--plot", str(svg))
    text = svg.read_text()
    assert code == 0 and text.startswith("<svg") and text.count('fill="red"') == 5
    assert run(capsys, "analyze", "--gaps", "1", "--plot", str(svg))[0] == 64


def test_enumerate_counts(capsys):
    for avoid in ("2,1", "2,0"):
        code, out, _ = run(capsys, "enumerate", "--corner", "3,2", "--avoid", avoid)
        assert code == 0 and len(json.loads(out)["nodes"]) == 7
    code, out, _ = run(capsys, "enumerate", "--corner", "2")
    assert len(json.loads(out)["nodes"]) == 1


def test_enumerate_dot_shape(capsys):
    code, out, _ = run(capsys, "enumerate", "--corner", "3,2", "--avoid", "2,0", "--format", "dot")
    edges = [line for line in out.splitlines() if "->" in line]
    assert code == 0 and len(edges) == 6
    assert sum(line.startswith("  n0 ->") for line in edges) == 3


def test_enumerate_nodes_round_trip_through_analyze(capsys):
    _, out, _ = run(capsys, "enumerate", "--corner", "3,3", "--order", "grlex", "--dedup", "off")
    for node in json.loads(out)["nodes"]:
        gaps = ";".join(",".join(map(str, p)) for p in node["gaps"])
        code, prof, _ = run(capsys, "analyze", "--gaps", gaps, "--d", "2")
        assert code == 0 and json.loads(prof)["corner"] == [3, 3]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--corner", "0,2"],
        ["enumerate", "--corner", "1,1"],
        ["enumerate", "--corner", "3,2", "--avoid", "5,5"],
        ["enumerate", "--corner", "3,2", "--avoid", "1"],
        ["enumerate", "--corner", "3,2", "--order", "revlex"],
        ["maximals"],
        ["verify", "--id", "atom-iff-ceh"],
        ["verify"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_64(argv, capsys):
    with pytest.raises(SystemExit) as e:
        code = main(argv)
        raise SystemExit(code)
    assert e.value.code == 64


def test_maximals_matches_fixture_bytes(tmp_path, capsys):
    assert run(capsys, "fixtures", "--out", str(tmp_path))[0] == 0
    for avoid, name in (("2,2;3,3", "maximals_44_22_33.json"), ("1,1;3,3", "maximals_44_11_33.json")):
        code, out, _ = run(capsys, "maximals", "--corner", "4,4", "--avoid", avoid)
        assert code == 0 and out == (tmp_path / name).read_text()
    corner_43 = json.loads((tmp_path / "corner_43.json").read_text())
    assert GapSet.from_dict(corner_43) == CORNER_43


def test_maximals_without_avoid(capsys):
    code, out, _ = run(capsys, "maximals", "--corner", "4,3")
    doc = json.loads(out)
    _, tree, _ = run(capsys, "enumerate", "--corner", "4,3")
    want = sorted(n["gaps"] for n in json.loads(tree)["nodes"] if not n["ceh"])
    assert code == 0 and sorted(g["gaps"] for g in doc["gapsets"]) == want


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--id", "atom-iff-ceh", "--bound", "3,3")
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out, _ = run(capsys, "verify", "--id", "converse-irreducible-ceh-empty", "--bound", "5,3")
    assert code == 3 and len(json.loads(out)["counterexamples"]) >= 1
    code, out, _ = run(capsys, "verify", "--id", "teo-ani", "--g1", "2,2", "--g2", "3,3")
    assert code == 0 and json.loads(out)["params"]["all_non_irreducible"] is True
    code, _, err = run(capsys, "verify", "--id", "no-such", "--bound", "3,3")
    assert code == 64 and "atom-iff-ceh" in err
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.splitlines()) == len(REGISTRY)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--bound", "3,2")
    assert code == 0 and all(r["counterexamples"] == [] for r in json.loads(out))


def test_console_script_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "gnsatoms.cli", "enumerate", "--corner", "4,3", "--format", "dot"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"digraph")
