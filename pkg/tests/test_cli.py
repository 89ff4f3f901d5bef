"""Command-line interface: verbs, formats, and exit codes."""

import io
import json
import sys
from fractions import Fraction

import pytest

from ecclib import decode_graph6, encode_graph6, canonical_certificate
from ecclib.cli import run
from ecclib.families import (
    make_broom,
    make_lollipop,
    make_path,
    make_pc_graph,
    make_starlike,
)
from ecclib.graph import format_edge_list
import ecclib.conjectures as conjectures


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# usage-level behaviour
# ---------------------------------------------------------------------------


def test_help_exits_zero(capsys):
    code, out, _ = run_capture(capsys, ["--help"])
    assert code == 0
    assert "invariants" in out and "scan" in out


def test_missing_verb_is_usage_error(capsys):
    code, _, err = run_capture(capsys, [])
    assert code == 1


def test_unknown_verb_is_usage_error(capsys):
    code, _, _ = run_capture(capsys, ["frobnicate"])
    assert code == 1


def test_computation_errors_exit_two(capsys):
    code, _, err = run_capture(capsys, ["family", "broom", "n=5", "delta=9"])
    assert code == 2
    assert err.startswith("error:")
    code, _, err = run_capture(capsys, ["invariants", "--g6", "!!!"])
    assert code == 2
    code, _, err = run_capture(capsys, ["invariants"])
    assert code == 2
    assert "no input graph" in err


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_invariants_json(capsys):
    g6 = encode_graph6(make_lollipop(7, 4))
    code, out, _ = run_capture(capsys, ["invariants", "--g6", g6])
    assert code == 0
    d = json.loads(out)
    assert d["n"] == 7 and d["clique"] == 4
    assert Fraction(d["average_eccentricity"]) == Fraction(24, 7)


def test_invariants_csv_and_text(capsys):
    g6 = encode_graph6(make_path(5))
    code, out, _ = run_capture(capsys, ["invariants", "--g6", g6, "--format", "csv"])
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[0] == "n"
    assert row.split(",")[0] == "5"
    code, out, _ = run_capture(capsys, ["invariants", "--g6", g6, "--format", "text"])
    assert code == 0
    assert "average_eccentricity: 16/5" in out


def test_invariants_from_stdin(capsys, monkeypatch):
    lines = [encode_graph6(make_path(n)) for n in (4, 5)]
    monkeypatch.setattr(sys, "stdin", io.StringIO("\n".join(lines) + "\n"))
    code, out, _ = run_capture(capsys, ["invariants", "--g6", "-"])
    assert code == 0
    # one pretty-printed report per stdin line
    assert out.count('"n": 4') == 1 and out.count('"n": 5') == 1


def test_invariants_from_edge_list(capsys, tmp_path):
    g = make_broom(7, 4)
    path = tmp_path / "broom.edges"
    path.write_text(format_edge_list(g), encoding="ascii")
    code, out, _ = run_capture(capsys, ["invariants", "--edges", str(path)])
    assert code == 0
    assert json.loads(out)["max_degree"] == 4


# ---------------------------------------------------------------------------
# family and transform
# ---------------------------------------------------------------------------


def test_family_emits_graph6(capsys):
    code, out, _ = run_capture(capsys, ["family", "broom", "n=11", "delta=6"])
    assert code == 0
    assert out.strip() == encode_graph6(make_broom(11, 6))


def test_family_alias_and_starlike_parts(capsys):
    code, out, _ = run_capture(capsys, ["family", "pc", "k=2", "delta=2"])
    assert code == 0
    assert out.strip() == encode_graph6(make_pc_graph(2, 2))
    code, out, _ = run_capture(capsys, ["family", "starlike", "parts=3,2,1"])
    assert code == 0
    assert out.strip() == encode_graph6(make_starlike(3, 2, 1))


def test_family_parameter_errors(capsys):
    code, _, err = run_capture(capsys, ["family", "broom", "n=11"])
    assert code == 2 and "expects parameters" in err
    code, _, err = run_capture(capsys, ["family", "petersen"])
    assert code == 2 and "unknown family" in err
    code, _, err = run_capture(capsys, ["family", "broom", "n:11", "delta:6"])
    assert code == 2 and "name=value" in err


def test_transform_pi_json(capsys):
    g6 = encode_graph6(make_starlike(2, 2, 1))
    code, out, _ = run_capture(
        capsys, ["transform", "pi", "--g6", g6, "--anchor", "0"]
    )
    assert code == 0
    d = json.loads(out)
    assert d["op"] == "pi"
    assert Fraction(d["ecc_before"]) == Fraction(19, 6)
    assert Fraction(d["ecc_after"]) > Fraction(19, 6)
    assert decode_graph6(d["output"]).n == 6


def test_transform_sigma_text(capsys):
    # two triangles joined by the bridge (2, 3)
    g6 = "ExCW"
    code, out, _ = run_capture(
        capsys,
        ["transform", "sigma", "--g6", g6, "--bridge", "2,3", "--format", "text"],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert "ecc before: 8/3" in lines[1]
    assert "ecc after: 11/6" in lines[2]


def test_transform_errors(capsys):
    g6 = encode_graph6(make_starlike(2, 2, 1))
    code, _, err = run_capture(capsys, ["transform", "pi", "--g6", g6])
    assert code == 2 and "--anchor" in err
    code, _, err = run_capture(capsys, ["transform", "sigma", "--g6", g6])
    assert code == 2 and "--bridge" in err
    # precondition failures surface as computation errors
    code, _, err = run_capture(
        capsys, ["transform", "sigma", "--g6", "ExCW", "--bridge", "0,1"]
    )
    assert code == 2


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def test_enumerate_trees_range(capsys):
    code, out, _ = run_capture(capsys, ["enumerate", "trees", "--n", "4..6"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2 + 3 + 6
    assert all(decode_graph6(line).n in (4, 5, 6) for line in lines)


def test_enumerate_starlike_k(capsys):
    code, out, _ = run_capture(
        capsys, ["enumerate", "starlike", "--n", "7", "--k", "3"]
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_enumerate_chemical_filter(capsys):
    code, out, _ = run_capture(
        capsys, ["enumerate", "trees", "--n", "8", "--chemical"]
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 18


def test_enumerate_to_file(capsys, tmp_path):
    target = tmp_path / "u5.g6"
    code, out, _ = run_capture(
        capsys, ["enumerate", "unicyclic", "--n", "5", "--out", str(target)]
    )
    assert code == 0 and out == ""
    lines = target.read_text(encoding="ascii").strip().splitlines()
    assert len(lines) == 5


def test_enumerate_bad_range(capsys):
    code, _, err = run_capture(capsys, ["enumerate", "trees", "--n", "6..4"])
    assert code == 2
    code, _, err = run_capture(capsys, ["enumerate", "trees", "--n", "4..5..6"])
    assert code == 2 and "range" in err


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def test_scan_json_roundtrip(capsys):
    code, out, _ = run_capture(
        capsys,
        ["scan", "--conjecture", "A.478-U", "--class", "trees", "--n", "4..8"],
    )
    assert code == 0
    d = json.loads(out)
    assert d["conjecture"] == "A.478-U"
    assert d["graphs_scanned"] == 2 + 3 + 6 + 11 + 23
    assert d["violations"] == []
    assert len(d["equalities"]) == 5


def test_scan_text_and_csv(capsys):
    argv = ["scan", "--conjecture", "A.462-L", "--class", "trees", "--n", "4..7"]
    code, out, _ = run_capture(capsys, argv + ["--format", "text"])
    assert code == 0
    assert out.startswith("A.462-L [A.462-L] over trees n=4..7")
    code, out, _ = run_capture(capsys, argv + ["--format", "csv"])
    assert code == 0
    assert out.splitlines()[0].startswith("conjecture,")


def test_scan_from_g6_file(capsys, tmp_path):
    catalog = tmp_path / "paths.g6"
    catalog.write_text(
        "\n".join(encode_graph6(make_path(n)) for n in range(4, 9)) + "\n",
        encoding="ascii",
    )
    code, out, _ = run_capture(
        capsys, ["scan", "--conjecture", "A.478-U", "--from-g6", str(catalog)]
    )
    assert code == 0
    d = json.loads(out)
    assert d["graphs_scanned"] == 5
    assert d["class"] == f"graph6:{catalog}"


def test_scan_requires_inputs(capsys):
    code, _, err = run_capture(capsys, ["scan", "--conjecture", "A.478-U"])
    assert code == 2 and "--from-g6" in err
    code, _, err = run_capture(
        capsys, ["scan", "--conjecture", "A.999", "--class", "trees", "--n", "4..6"]
    )
    assert code == 2 and "no conjecture" in err


def test_scan_open_violation_exits_three(capsys, monkeypatch):
    # inject a catalog entry whose bound every graph violates
    fake = conjectures.ConjectureSpec(
        id="A.000-T",
        paper_label="A.000-T",
        combiner="sum",
        invariants=("independence_number", "average_eccentricity"),
        direction="upper",
        bound=lambda n: Fraction(0),
        bound_kind="rational",
        claimed_extremal="none",
        checkable="closed-bound",
        paper_status="open",
    )
    monkeypatch.setitem(conjectures._BY_ID, "A.000-T", fake)
    code, out, err = run_capture(
        capsys,
        ["scan", "--conjecture", "A.000-T", "--class", "trees", "--n", "4..5"],
    )
    assert code == 3
    assert "exit code 3" in err
    assert json.loads(out)["violations"]


def test_scan_refuted_violations_exit_zero(capsys):
    # the refuted domination entry violates on trees, but that is old news
    code, out, _ = run_capture(
        capsys,
        [
            "scan",
            "--conjecture",
            "A.464-L-domination-original",
            "--class",
            "trees",
            "--n",
            "4..6",
        ],
    )
    assert code == 0
    assert json.loads(out)["violations"]


# ---------------------------------------------------------------------------
# refute-a100 and formulas
# ---------------------------------------------------------------------------


def test_refute_json(capsys):
    code, out, _ = run_capture(
        capsys, ["refute-a100", "--k", "2..6", "--delta", "2..4"]
    )
    assert code == 0
    d = json.loads(out)
    assert len(d["rows"]) == 3 * 3
    assert all(not row["violated"] for row in d["rows"])


def test_refute_filters_odd_k(capsys):
    code, out, _ = run_capture(
        capsys, ["refute-a100", "--k", "4..5", "--delta", "3", "--format", "csv"]
    )
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 1 and rows[0].startswith("4,3,")
    code, _, err = run_capture(capsys, ["refute-a100", "--k", "3", "--delta", "3"])
    assert code == 2 and "even" in err


def test_refute_finds_large_violations(capsys):
    code, out, _ = run_capture(
        capsys,
        ["refute-a100", "--k", "20", "--delta", "20", "--format", "text"],
    )
    assert code == 0
    assert "1 violations" in out or "violations" in out
    assert "n=422" in out


def test_formulas_text_table(capsys):
    code, out, _ = run_capture(
        capsys, ["formulas", "--family", "broom", "--n", "5..7", "--delta", "2..3"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) >= 4  # header plus one row per feasible pair
    assert "closed" in lines[0] and "bfs" in lines[0]


def test_formulas_csv_agrees_with_library(capsys):
    code, out, _ = run_capture(
        capsys,
        ["formulas", "--family", "lollipop", "--n", "8", "--k", "2..7",
         "--format", "csv"],
    )
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 6
    for row in rows:
        n_, k_, closed, bfs, match = row.split(",")
        assert Fraction(closed) == Fraction(bfs)
        assert match == "true"


def test_formulas_pc_skips_odd_k(capsys):
    code, out, err = run_capture(
        capsys,
        ["formulas", "--family", "pc", "--k", "2..5", "--delta", "3",
         "--format", "csv"],
    )
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 2  # k = 2 and k = 4 only
