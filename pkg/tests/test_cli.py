"""CLI tests: golden outputs, exit codes, and format consistency."""

import csv
import io
import json
from pathlib import Path

import jsonschema
import pytest

from ranktwo.cli import main

GOLDEN = Path(__file__).parent / "golden"
SCHEMA_DIR = Path(__file__).parent.parent / "docs" / "schemas"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- count ---------------------------------------------------------------

def test_count_total(capsys):
    code, out, _ = run(capsys, "count", "12", "18")
    assert code == 0
    assert out == "80\n"


def test_count_order_filter(capsys):
    code, out, _ = run(capsys, "count", "12", "18", "--order", "6")
    assert code == 0
    assert out == "12\n"


def test_count_type_filter(capsys):
    code, out, _ = run(capsys, "count", "12", "18", "--type", "3,12")
    assert code == 0
    assert out == "2\n"


def test_count_cyclic_filter(capsys):
    code, out, _ = run(capsys, "count", "12", "18", "--cyclic")
    assert code == 0
    assert out == "48\n"


def test_count_rejects_bad_type(capsys):
    code, _, err = run(capsys, "count", "12", "18", "--type", "3,4")
    assert code == 2
    assert "does not divide" in err


def test_count_rejects_multiple_filters(capsys):
    code, _, err = run(capsys, "count", "12", "18", "--order", "2", "--cyclic")
    assert code == 2


def test_count_rejects_zero(capsys):
    code, _, err = run(capsys, "count", "0", "18")
    assert code == 2


def test_count_formats_agree(capsys):
    _, plain, _ = run(capsys, "count", "12", "18")
    _, js, _ = run(capsys, "count", "12", "18", "--format", "json")
    _, cs, _ = run(capsys, "count", "12", "18", "--format", "csv")
    value = int(plain.strip())
    assert json.loads(js)["count"] == value
    rows = list(csv.reader(io.StringIO(cs)))
    assert rows[0] == ["count"]
    assert int(rows[1][0]) == value


# --- table ---------------------------------------------------------------

def test_table_golden(capsys):
    code, out, _ = run(capsys, "table", "12", "18")
    assert code == 0
    assert out == (GOLDEN / "table_12_18.txt").read_text()


def test_table_json_golden_and_schema(capsys):
    code, out, _ = run(capsys, "table", "12", "18", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "table_12_18.json").read_text()
    schema = json.loads((SCHEMA_DIR / "subgroup_table.schema.json").read_text())
    jsonschema.validate(json.loads(out), schema)


def test_table_csv_golden(capsys):
    code, out, _ = run(capsys, "table", "12", "18", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "table_12_18.csv").read_text()


def test_table_trivial(capsys):
    code, out, _ = run(capsys, "table", "1", "1")
    assert code == 0
    assert "total: 1" in out


def test_table_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "4", "6", "--format", "json")
    obj = json.loads(out)
    schema = json.loads((SCHEMA_DIR / "subgroup_table.schema.json").read_text())
    jsonschema.validate(obj, schema)
    assert obj["ambient"] == [4, 6]
    assert obj["total"] == sum(r["count"] for r in obj["by_order"])
    assert obj["total"] == sum(r["count"] for r in obj["by_type"])
    assert obj["cyclic"] + obj["noncyclic"] == obj["total"]


def test_table_formats_agree(capsys):
    _, plain, _ = run(capsys, "table", "12", "18")
    _, js, _ = run(capsys, "table", "12", "18", "--format", "json")
    _, cs, _ = run(capsys, "table", "12", "18", "--format", "csv")
    obj = json.loads(js)
    rows = {(r[0], r[1]): int(r[2]) for r in list(csv.reader(io.StringIO(cs)))[1:]}
    assert rows[("total", "")] == obj["total"] == 80
    assert rows[("cyclic", "")] == obj["cyclic"]
    for entry in obj["by_order"]:
        assert rows[("order", str(entry["order"]))] == entry["count"]
        assert f"  {entry['order']}: {entry['count']}" in plain
    for entry in obj["by_type"]:
        assert rows[("type", f"{entry['a']}x{entry['b']}")] == entry["count"]


# --- enumerate -------------------------------------------------------------

def test_enumerate_klein(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "2")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_enumerate_12_18_line_count(capsys):
    code, out, _ = run(capsys, "enumerate", "12", "18")
    assert code == 0
    assert len(out.splitlines()) == 80


def test_enumerate_trivial(capsys):
    code, out, _ = run(capsys, "enumerate", "1", "1")
    assert code == 0
    assert out.splitlines() == [
        "(1,1,1,1,1) order=1 exponent=1 invariants=(1,1) cyclic=yes "
        "generators=(0,0),(0,0)"
    ]


def test_enumerate_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "12", "18", "--limit", "3")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["ambient"] == [2, 2]
    assert len(obj["subgroups"]) == 5
    orders = sorted(r["order"] for r in obj["subgroups"])
    assert orders == [1, 2, 2, 2, 4]


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:5] == ["a", "b", "c", "d", "ell"]
    assert len(rows) == 6


# --- figure ----------------------------------------------------------------

def test_figure_golden(capsys):
    code, out, _ = run(capsys, "figure", "12", "18", "6", "2", "18", "6", "1")
    assert code == 0
    assert out == (GOLDEN / "figure_12_18_6_2_18_6_1.txt").read_text()


def test_figure_bullet_positions_match_materialization(capsys):
    from ranktwo import GoursatTuple, materialize
    _, out, _ = run(capsys, "figure", "12", "18", "6", "2", "18", "6", "1")
    lines = out.splitlines()
    # n data rows plus one column-label row
    assert len(lines) == 19
    bullets = set()
    for line in lines[:-1]:
        label, *cells = line.split()
        y = int(label)
        stars = [x for x, ch in enumerate(cells) if ch == "*"]
        bullets.update((x, y) for x in stars)
    expected = set(materialize(12, 18, GoursatTuple(6, 2, 18, 6, 1)).elements)
    assert bullets == expected
    assert len(bullets) == 36


def test_figure_trivial(capsys):
    code, out, _ = run(capsys, "figure", "2", "2", "1", "1", "1", "1", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[1].split() == ["0", "*", "."]


def test_figure_bullet_count_equals_order(capsys):
    for m, n, a, b, c, d, ell in [(9, 6, 9, 3, 6, 2, 2), (8, 8, 4, 2, 8, 4, 1)]:
        code, out, _ = run(capsys, "figure", *map(str, (m, n, a, b, c, d, ell)))
        assert code == 0
        assert sum(line.count("*") for line in out.splitlines()) == a * d


def test_figure_rejects_non_member(capsys):
    code, _, err = run(capsys, "figure", "12", "18", "5", "1", "1", "1", "1")
    assert code == 2
    assert "does not divide m" in err


def test_figure_rejects_oversized_grid(capsys):
    code, _, err = run(capsys, "figure", "41", "2", "1", "1", "1", "1", "1")
    assert code == 2


# --- verify ----------------------------------------------------------------

def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify", "12", "18")
    assert code == 0
    assert out == (GOLDEN / "verify_12_18.txt").read_text()
    assert out == "OK, 80 subgroups, 0 mismatches\n"


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "1", "1")
    assert code == 0
    assert "OK" in out


def test_verify_range(capsys):
    code, out, _ = run(capsys, "verify", "--range", "8", "8")
    assert code == 0
    assert "64 pairs checked, 0 mismatches" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "12", "18", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["total_mismatches"] == 0
    assert obj["pairs"][0]["subgroups"] == 80


def test_verify_bound_exceeded(capsys):
    code, _, err = run(capsys, "verify", "30", "30")
    assert code == 2
    assert "exceeds bound" in err


def test_verify_missing_args(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
