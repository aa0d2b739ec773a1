import json

import pytest

from chromhom.cli import main, parse_graph_spec, render_table
from chromhom.graph import complete, cycle
from chromhom.homology import BigradedHomology, compute_all
from chromhom.algebra import make_truncated


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_specs(tmp_path):
    assert parse_graph_spec("gen:cycle:6") == cycle(6)
    assert parse_graph_spec("gen:complete:4") == complete(4)
    assert parse_graph_spec("gen:vgon:4:0-2").edge_count == 5
    p = tmp_path / "g.txt"
    p.write_text("vertices 3\n0 1\n1 2\n2 0\n")
    assert parse_graph_spec(f"file:{p}") == cycle(3)
    pj = tmp_path / "g.json"
    pj.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}))
    assert parse_graph_spec(f"file:{pj}") == cycle(3)
    with pytest.raises(ValueError):
        parse_graph_spec("nonsense")


def test_compute_table(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "gen:cycle:6", "--algebra", "trunc:2",
        "--format", "table",
    )
    assert code == 0
    assert "[1_2]" in out  # bracketed torsion marker


def test_compute_table_loop_graph(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "gen:cycle:1", "--algebra", "trunc:2",
    )
    assert code == 0
    assert "trivial" in out


def test_compute_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "gen:cycle:3", "--algebra", "trunc:3",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    h = BigradedHomology.from_json_dict(data)
    assert h == compute_all(cycle(3), make_truncated(3))


def test_chromatic_coefficients(capsys):
    code, out, _ = run_cli(capsys, "chromatic", "--graph", "gen:complete:4")
    assert code == 0
    assert out.strip() == "0 -6 11 -6 1"


def test_bases_dump(capsys):
    code, out, _ = run_cli(
        capsys, "bases", "--graph", "gen:cycle:3", "--algebra", "trunc:2",
        "--i", "0", "--j", "2",
    )
    assert code == 0
    assert "state#0: subset=0b000" in out


def test_verify_single_check(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "polygon", "--n", "5",
    )
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["check"] == "polygon-closed-form" and rec["passed"]


def test_verify_vgon_and_exactness_checks(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "vgon",
        "--graph", "gen:vgon:4:0-2", "--algebra", "trunc:2",
    )
    assert code == 0 and json.loads(out.splitlines()[0])["passed"]
    code, out, _ = run_cli(
        capsys, "verify", "--check", "exactness",
        "--graph", "gen:cycle:4", "--algebra", "trunc:3", "--edge", "1",
    )
    assert code == 0 and json.loads(out.splitlines()[0])["passed"]


def test_usage_errors_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--graph", "gen:cycle:3", "--algebra", "frob:1",
    )
    assert code == 2 and "error" in err
    code, _, err = run_cli(
        capsys, "compute", "--graph", "gen:zzz:3", "--algebra", "trunc:2",
    )
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--suite", "unknown")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--check", "unknown")
    assert code == 2 and "known" in err
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_more_single_checks(capsys):
    for argv in (
        ["verify", "--check", "vanishing", "--graph", "gen:cycle:4",
         "--algebra", "trunc:2"],
        ["verify", "--check", "thickness", "--graph", "gen:cycle:4",
         "--algebra", "trunc:3"],
        ["verify", "--check", "p3-am", "--m", "3"],
        ["verify", "--check", "fixtures"],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, argv
        assert json.loads(out.splitlines()[0])["passed"]


def test_window_violation_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--graph", "gen:cycle:3", "--algebra", "window:3",
        "--jrange", "0:9",
    )
    assert code == 2 and "window" in err


def test_memory_cap_exit_3(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--graph", "gen:complete:5", "--algebra", "trunc:2",
        "--memory-cap", "1000",
    )
    assert code == 3 and "cap" in err


def test_memory_cap_refuses_large_graphs_instantly(capsys):
    # 39 edges is legal but its subset bookkeeping floor alone exceeds the
    # default cap; the refusal must not attempt any enumeration
    import time

    t0 = time.time()
    code, _, err = run_cli(
        capsys, "compute", "--graph", "gen:path:40", "--algebra", "trunc:2",
    )
    assert code == 3 and time.time() - t0 < 2


def test_jrange_restriction(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "gen:cycle:3", "--algebra", "trunc:2",
        "--jrange", "2:2", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert {e["j"] for e in data["groups"]} == {2}


def test_render_table_orientation():
    h = compute_all(cycle(3), make_truncated(2))
    table = render_table(h)
    lines = table.splitlines()
    assert lines[0].split()[0] == "j\\i"
    assert "[1_2]" in table


def test_triplets_format(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--graph", "gen:cycle:3", "--algebra", "trunc:2",
        "--format", "triplets",
    )
    assert code == 0
    assert "slice i=0 j=0" in out or "slice i=0 j=1" in out


def test_edge_cap_exit_2(capsys, tmp_path):
    lines = ["vertices 65"] + [f"{i} {i + 1}" for i in range(64)]
    p = tmp_path / "big.txt"
    p.write_text("\n".join(lines) + "\n")
    code, _, err = run_cli(
        capsys, "compute", "--graph", f"file:{p}", "--algebra", "trunc:2",
    )
    assert code == 2 and "63" in err


def test_verify_paper_suite_exit_zero(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "paper")
    assert code == 0
    assert "0 hard failures" in err
    records = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    assert all(r["passed"] or r["soft"] for r in records)


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "chromhom", "chromatic", "--graph", "gen:cycle:3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "0 2 -3 1"


def test_hard_failure_exit_1(capsys, monkeypatch):
    from chromhom.cli import _SINGLE_CHECKS
    from chromhom.theorems import CheckReport

    monkeypatch.setitem(
        _SINGLE_CHECKS, "dichotomy",
        lambda args, g, a: CheckReport("torsion-dichotomy", {}, False, witness="forced"),
    )
    code, out, err = run_cli(
        capsys, "verify", "--check", "dichotomy", "--graph", "gen:cycle:3",
    )
    assert code == 1 and "1 hard failures" in err
