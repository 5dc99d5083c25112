"""End-to-end tests of the command-line interface."""

from __future__ import annotations

import json
import re

import pytest

from treefact.cli import main
from treefact.trees import export_dot, export_tikz

from conftest import (
    CAYLEY,
    DISTINGUISHED_TOTALS,
    FACTS4,
    EX10_INDICATOR,
    STAR3_INDICATOR,
    STAR3_REFS,
    TREE4_FIRST_EDGES,
    TREE4_FIRST_MARKED,
)

STAR3_EDGE_LIST = "1 3\n2 3\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_input(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def test_enumerate_trees_rank4(capsys):
    code, out, err = run_cli(capsys, "enumerate", "trees", "--n", "4")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == CAYLEY[4]
    records = [json.loads(line) for line in lines]
    assert records[0]["edges"] == [[1, 2], [1, 3], [1, 4]]
    assert records[0]["marked"] == [4, 1]
    assert all(set(r) == {"n", "edges", "rotation", "marked"}
               for r in records)
    # Canonical JSON: each line is byte-identical to its compact re-dump.
    for line, record in zip(lines, records):
        assert line == json.dumps(record, sort_keys=True,
                                  separators=(",", ":"))


def test_enumerate_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "enumerate", "trees", "--n", "4")
    _, second, _ = run_cli(capsys, "enumerate", "trees", "--n", "4")
    assert first == second


def test_enumerate_maximal_rank2(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "maximal-subwords",
                           "--n", "2")
    assert code == 0
    assert json.loads(out) == {"n": 2, "indicator": [0, 0]}


def test_enumerate_maximal_text_format(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "maximal-subwords",
                           "--n", "2", "--format", "text")
    assert code == 0
    assert out == "n=2 indicator=00 skips=[1,2]\n"


def test_enumerate_distinguished_counts(capsys):
    for n in (3, 4):
        code, out, _ = run_cli(capsys, "enumerate", "distinguished-subwords",
                               "--n", str(n))
        assert code == 0
        assert len(out.splitlines()) == DISTINGUISHED_TOTALS[n]


def test_enumerate_cyclic_factorizations_rank4(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "cyclic-factorizations",
                           "--n", "4")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == CAYLEY[4]
    got = {tuple((r["lo"], r["hi"]) for r in rec["refs"]) for rec in records}
    assert got == set(FACTS4)
    assert all(rec["n"] == 4 for rec in records)


def test_enumerate_limit(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "trees", "--n", "4",
                           "--limit", "5")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_enumerate_jobs_agree(capsys):
    _, serial, _ = run_cli(capsys, "enumerate", "maximal-subwords",
                           "--n", "4")
    _, parallel, _ = run_cli(capsys, "enumerate", "maximal-subwords",
                             "--n", "4", "--jobs", "2")
    assert serial == parallel


@pytest.mark.parametrize(
    "argv",
    [
        ("enumerate", "trees", "--n", "8"),
        ("enumerate", "trees", "--n", "1"),
        ("enumerate", "maximal-subwords", "--n", "7"),
        ("enumerate", "distinguished-subwords", "--n", "6"),
        ("verify", "--n", "7"),
        ("orbits", "--n", "6"),
    ],
)
def test_out_of_bounds_rank_is_a_usage_error(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    assert excinfo.value.code == 2
    err = capsys.readouterr().err
    assert "documented bounds" in err


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------


def test_convert_edge_list_to_subword(capsys, tmp_path):
    path = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    code, out, err = run_cli(capsys, "convert", "--direction",
                             "tree-to-subword", "--edge-list", "--file", path)
    assert code == 0 and err == ""
    assert json.loads(out) == {"n": 3, "indicator": list(STAR3_INDICATOR)}


def test_convert_edge_list_to_subword_text(capsys, tmp_path):
    path = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "tree-to-subword", "--edge-list", "--file", path,
                           "--format", "text")
    assert code == 0
    assert out == "n=3 indicator=010010 skips=[1,3,4,6]\n"


def test_convert_plane_tree_json_to_subword(capsys, tmp_path, example_tree):
    path = write_input(tmp_path, "fig.json", json.dumps(example_tree.to_dict()))
    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "tree-to-subword", "--file", path)
    assert code == 0
    assert json.loads(out)["indicator"] == list(EX10_INDICATOR)


def test_convert_subword_to_tree(capsys, tmp_path, example_tree, example_subword):
    path = write_input(tmp_path, "sub.json",
                       json.dumps(example_subword.to_dict()))
    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "subword-to-tree", "--file", path,
                           "--check-roundtrip")
    assert code == 0
    assert json.loads(out) == json.loads(json.dumps(example_tree.to_dict()))


def test_convert_tree_to_factorization(capsys, tmp_path):
    path = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "tree-to-factorization", "--edge-list",
                           "--file", path)
    assert code == 0
    record = json.loads(out)
    assert tuple((r["lo"], r["hi"]) for r in record["refs"]) == STAR3_REFS

    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "tree-to-factorization", "--edge-list",
                           "--file", path, "--format", "text")
    assert code == 0
    assert out == "n=3 ((0,1)) ((1,3)) ((0,2)) ((2,3))\n"


def test_convert_factorization_to_tree(capsys, tmp_path):
    record = {"n": 4, "refs": [{"n": 4, "lo": lo, "hi": hi}
                               for lo, hi in FACTS4[0]]}
    path = write_input(tmp_path, "fact.json", json.dumps(record))
    code, out, _ = run_cli(capsys, "convert", "--direction",
                           "factorization-to-tree", "--file", path,
                           "--check-roundtrip")
    assert code == 0
    tree = json.loads(out)
    assert tree["edges"] == [list(e) for e in TREE4_FIRST_EDGES]
    assert tree["marked"] == list(TREE4_FIRST_MARKED)


def test_convert_roundtrip_flag_passes_everywhere(capsys, tmp_path):
    path = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    for direction in ("tree-to-subword", "tree-to-factorization"):
        code, _, err = run_cli(capsys, "convert", "--direction", direction,
                               "--edge-list", "--file", path,
                               "--check-roundtrip")
        assert code == 0 and err == ""


@pytest.mark.parametrize(
    "direction,payload",
    [
        ("tree-to-subword", "not json"),
        ("tree-to-subword", '{"n": 3}'),
        ("tree-to-subword", '[1, 2]'),
        ("subword-to-tree", '{"n": 3, "indicator": [0, 0, 0, 0, 0, 0]}'),
        ("subword-to-tree", '{"n": 3}'),
        ("factorization-to-tree", '{"n": 3, "refs": []}'),
    ],
)
def test_convert_invalid_input(capsys, tmp_path, direction, payload):
    path = write_input(tmp_path, "bad.json", payload)
    code, out, err = run_cli(capsys, "convert", "--direction", direction,
                             "--file", path)
    assert code == 2
    assert out == ""
    assert err.startswith("invalid input:")


def test_convert_invalid_edge_list(capsys, tmp_path):
    path = write_input(tmp_path, "bad.txt", "1 2 3\n")
    code, _, err = run_cli(capsys, "convert", "--direction",
                           "tree-to-subword", "--edge-list", "--file", path)
    assert code == 2
    assert "invalid input" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_polynomials_rank3(capsys):
    code, out, err = run_cli(capsys, "verify", "--n", "3",
                             "--suite", "polynomials")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines, "verify must print at least one check line"
    for line in lines[:-1]:
        assert re.match(r"^(PASS|SKIP) polynomials: ", line)
    assert re.match(r"^\d+ passed(, \d+ skipped)?$", lines[-1])
    assert not any(line.startswith("FAIL") for line in lines)


def test_verify_all_rank2(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "2")
    assert code == 0
    assert "passed" in out.splitlines()[-1]
    assert not any(line.startswith("FAIL") for line in out.splitlines())


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


def test_orbits_rank4_json(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 4,
        "orbit_sizes": [4, 12],
        "orbits": 2,
        "total": 16,
    }


def test_orbits_rank2_text(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--n", "2", "--format", "text")
    assert code == 0
    assert out.splitlines() == [
        "n=2: 1 rotation orbits on 1 maximal subwords",
        "  1 orbit(s) of size 1",
    ]


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def test_export_dot_to_stdout(capsys, tmp_path, star3_tree):
    path = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    code, out, _ = run_cli(capsys, "export", "--format", "dot",
                           "--edge-list", "--file", path)
    assert code == 0
    assert out == export_dot(star3_tree)


def test_export_tikz_to_file(capsys, tmp_path, star3_tree):
    src = write_input(tmp_path, "star.txt", STAR3_EDGE_LIST)
    dst = tmp_path / "star.tex"
    code, out, _ = run_cli(capsys, "export", "--format", "tikz",
                           "--edge-list", "--file", src, "--out", str(dst))
    assert code == 0
    assert out == ""
    assert dst.read_text(encoding="utf-8") == export_tikz(star3_tree)


def test_export_invalid_input(capsys, tmp_path):
    path = write_input(tmp_path, "bad.json", "{")
    code, _, err = run_cli(capsys, "export", "--format", "dot",
                           "--file", path)
    assert code == 2
    assert "invalid input" in err
