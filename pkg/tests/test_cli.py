import json

import pytest

from src.algebra.abelian import parse_group
from src.lie.rootsys import build
from src.pipeline.renderer import dump_json
from src.qsub import run
from src.subgroups.census import census

FULL_A1 = {"v": 1, "type": "A", "rank": 1, "ell": 3, "Iplus": [1], "Iminus": [1]}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj), encoding="utf-8")
    return str(p)


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_roots(capsys):
    assert run(["roots", "--type", "A", "--rank", "2"]) == 0
    data = out_json(capsys)
    assert data["v"] == 1
    assert len(data["positive_roots"]) == 3
    assert data["dims"]["dim_g"] == 8


def test_datum_dim(tmp_path, capsys):
    assert run(["datum-dim", "--file", write(tmp_path, "d.json", FULL_A1)]) == 0
    data = out_json(capsys)
    assert data["dim_AD"] == 27
    assert data["dim_H"] == 27


def test_invalid_datum_exits_one(tmp_path, capsys):
    doc = dict(FULL_A1, ell=4)
    assert run(["datum-dim", "--file", write(tmp_path, "d.json", doc)]) == 1
    data = out_json(capsys)
    assert [v["code"] for v in data["violations"]] == ["ell"]


def test_g2_violation(tmp_path, capsys):
    doc = {"type": "G", "rank": 2, "ell": 9}
    assert run(["datum-dim", "--file", write(tmp_path, "d.json", doc)]) == 1
    assert out_json(capsys)["violations"][0]["message"] == "3 divides ℓ for G2"


def test_leq(tmp_path, capsys):
    counit = {"type": "A", "rank": 1, "ell": 3, "N": {"gens": [[1]]}}
    left, right = write(tmp_path, "a.json", FULL_A1), write(tmp_path, "b.json", counit)
    assert run(["leq", "--left", left, "--right", right]) == 0
    data = out_json(capsys)
    assert data["leq"] is True and data["equiv"] is False
    assert data["witness"]["tau"] == {"matrix": []}
    assert run(["leq", "--left", right, "--right", left]) == 0
    assert out_json(capsys)["leq"] is False


def test_leq_ambient_mismatch(tmp_path, capsys):
    other = dict(FULL_A1, ell=5)
    args = ["leq", "--left", write(tmp_path, "a.json", FULL_A1), "--right", write(tmp_path, "b.json", other)]
    assert run(args) == 1
    assert "different" in out_json(capsys)["error"]


def test_poset(tmp_path, capsys):
    family = {"v": 1, "data": [FULL_A1, {"type": "A", "rank": 1, "ell": 3},
                               {"type": "A", "rank": 1, "ell": 3, "N": {"gens": [[1]]}}]}
    path = write(tmp_path, "f.json", family)
    assert run(["poset", "--family", path, "--out", "json"]) == 0
    # classes sorted by canonical json: full, counit, torus
    assert out_json(capsys)["edges"] == [[0, 2], [2, 1]]
    assert run(["poset", "--family", path, "--out", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("digraph") and dot.count("->") == 2


def test_census_json_and_text(capsys):
    assert run(["census", "--type", "A", "--rank", "1", "--ell", "3", "--gammas", "1,Z3"]) == 0
    data = out_json(capsys)
    assert data == json.loads(dump_json(census(build("A", 1), 3, [parse_group("1"), parse_group("Z3")])))
    assert run(["census", "--type", "A", "--rank", "1", "--ell", "3", "--out", "text"]) == 0
    assert "- classes: 5" in capsys.readouterr().out


def test_census_output_file(tmp_path, capsys):
    target = tmp_path / "census.json"
    assert run(["--output", str(target), "census", "--type", "A", "--rank", "1", "--ell", "3"]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["data_count"] == 5


def test_output_is_byte_identical(capsys):
    argv = ["census", "--type", "A", "--rank", "1", "--ell", "3", "--gammas", "Z3"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_caps_flag(capsys):
    argv = ["--caps", "{max_gamma_order: 2}", "census", "--type", "A", "--rank", "1", "--ell", "3", "--gammas", "Z3"]
    assert run(argv) == 1
    assert "gamma_order" in out_json(capsys)["error"]
    assert run(["--caps", "{bogus: 1}", "roots", "--type", "A", "--rank", "1"]) == 2


def test_subalgebras(capsys):
    assert run(["subalgebras", "--type", "A", "--rank", "1", "--ell", "3"]) == 0
    data = out_json(capsys)
    assert data["count"] == 5
    assert sorted(t["dim"] for t in data["triples"]) == [1, 3, 9, 9, 27]


def test_oracle_single_check(capsys):
    assert run(["oracle", "--ell", "3", "--check", "characters"]) == 0
    data = out_json(capsys)
    assert data["passed"] is True
    assert list(data["checks"]) == ["characters"]


@pytest.mark.slow
def test_oracle_all(capsys):
    assert run(["oracle", "--ell", "3", "--check", "all"]) == 0
    assert out_json(capsys)["passed"] is True


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["roots", "--type", "A"],
    ["census", "--type", "A", "--rank", "1", "--ell", "4"],
    ["roots", "--type", "X", "--rank", "1"],
    ["roots", "--type", "D", "--rank", "3"],
    ["subalgebras", "--type", "G", "--rank", "3", "--ell", "5"],
    ["oracle", "--ell", "3", "--check", "nope"],
    ["--log-level", "chatty", "roots", "--type", "A", "--rank", "1"],
])
def test_usage_errors(argv):
    assert run(argv) == 2


def test_missing_and_malformed_files(tmp_path):
    assert run(["datum-dim", "--file", str(tmp_path / "nope.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(["datum-dim", "--file", str(bad)]) == 2
    assert run(["datum-dim", "--file", write(tmp_path, "d.json", {"rank": 1})]) == 2


def test_repeated_runs_log_to_current_stderr(capsys):
    argv = ["--caps", "{bogus: 1}", "roots", "--type", "A", "--rank", "1"]
    assert run(argv) == 2
    first = capsys.readouterr().err
    assert run(argv) == 2
    assert capsys.readouterr().err == first
    assert "[ERROR]" in first
