import json
import os
import subprocess

import pytest

CLI = os.environ.get("DISKFLOW_CLI", "diskflow")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_enum_count_only():
    r = run("enum", "--n", "3", "--count-only")
    assert r.returncode == 0
    assert r.stdout == "91\n"


def test_enum_listing_is_sorted_and_stable(tmp_path):
    r = run("enum", "--n", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert len(lines) == 15
    assert lines[0] == "110"
    out = tmp_path / "codes.txt"
    assert run("enum", "--n", "4", "--out", str(out)).returncode == 0
    env = dict(os.environ, DISKFLOW_THREADS="4")
    again = subprocess.run([CLI, "enum", "--n", "4"], capture_output=True, text=True, env=env)
    assert out.read_text() == again.stdout


def test_enum_cap():
    assert run("enum", "--n", "11").returncode == 1


def test_validate_exit_codes():
    assert run("validate", "0").returncode == 0
    gap = run("validate", "3 0 0~ 0")
    assert gap.returncode == 3
    assert "offending vertex: 0" in gap.stdout
    assert "boundary: [+1, -1, +1, -1]" in gap.stdout
    bad = run("validate", "01")
    assert bad.returncode == 2
    assert "property 3: FAIL" in bad.stdout
    assert run("validate", "1x").returncode == 1


def test_decode_encode_round_trip(tmp_path):
    path = tmp_path / "g.json"
    assert run("decode", "2100~", "--out", str(path)).returncode == 0
    doc = json.loads(path.read_text())
    assert doc["separatrices"] == 3
    assert [v["color"] for v in doc["vertices"]] == [None, 1, 1, -1]
    r = run("encode", str(path))
    assert r.returncode == 0
    assert r.stdout == "2100~\n"
    assert run("encode", "-", stdin=path.read_text()).stdout == "2100~\n"


def test_encode_rejects_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert run("encode", str(path)).returncode == 1
    assert run("encode", str(tmp_path / "missing.json")).returncode == 1


def test_table_csv(tmp_path):
    path = tmp_path / "t.csv"
    assert run("table", "--max-n", "5", "--csv", str(path)).returncode == 0
    rows = path.read_text().splitlines()
    assert rows[0] == "n,abstract_tree,flows_per_embedding,embeddings,total"
    assert len(rows) == 38
    assert "5,202010,108,4,432" in rows


def test_render():
    dot = run("render", "2100~", "--view", "tree")
    assert dot.returncode == 0
    assert dot.stdout.startswith("digraph")
    svg = run("render", "2100~", "--view", "diagram")
    assert svg.returncode == 0
    assert svg.stdout.count('class="loop"') == 3
    assert run("render", "3 0 0~ 0", "--view", "diagram").returncode == 3
    assert run("render", "01", "--view", "tree").returncode == 2
    assert run("render", "10", "--view", "sideways").returncode == 1


def test_oracle(tmp_path):
    path = tmp_path / "r.json"
    r = run("oracle", "--n", "3", "--json", str(path))
    assert r.returncode == 0
    assert "thm3_only_count: 1" in r.stdout
    doc = json.loads(path.read_text())
    assert doc == {"n": 3, "fast_count": 91, "oracle_count": 91, "thm3_only_count": 1, "witnesses": ["300~0"]}
    assert run("oracle", "--n", "6").returncode == 1


@pytest.mark.parametrize("args", [[], ["bogus"], ["enum"]])
def test_usage_errors(args):
    assert run(*args).returncode == 1
