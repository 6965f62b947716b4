import json

from src.algebra.abelian import parse_group
from src.lie.rootsys import build
from src.pipeline.renderer import (
    datum_label, dump_json, render_census_text, render_hasse_dot, write_output,
)
from src.subgroups.census import census
from src.subgroups.datum import counit_datum, full_datum, make_datum
from src.subgroups.order import hasse

A1 = build("A", 1)


def test_dump_json_is_sorted_and_stable():
    text = dump_json({"b": 1, "a": [1, 2]})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}
    assert text.endswith("\n")


def test_label():
    assert datum_label(full_datum(A1, 3), 27) == "I+={1} I-={1} |N|=1 Gamma=1 dim=27"


def test_hasse_dot():
    family = [full_datum(A1, 3), make_datum(A1, 3, (), ()), counit_datum(A1, 3)]
    text = render_hasse_dot(hasse(family))
    assert text.startswith("digraph qsub_hasse {")
    assert text.count("->") == 2
    assert 'label="I+={} I-={} |N|=3 Gamma=1"' in text


def test_census_text():
    text = render_census_text(census(A1, 3, [parse_group("Z3")]))
    assert text.startswith("# Census A1, ℓ = 3")
    assert "- classes: 7" in text


def test_write_output(tmp_path, capsys):
    path = tmp_path / "out" / "report.json"
    write_output("hello\n", path)
    assert path.read_text(encoding="utf-8") == "hello\n"
    write_output("to stdout\n")
    assert capsys.readouterr().out == "to stdout\n"
