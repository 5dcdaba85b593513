import json

import pytest

from degreerank import load_edge_list
from degreerank.cli import main
from degreerank.graph_core import save_edge_list
from degreerank.ranking import load_rank_table, load_report, report_from_table
from degreerank.sampler import load_params


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture()
def generated(workdir, capsys):
    assert run("generate", "--nodes", 2000, "--seed", 5, "--out", "graph.txt") == 0
    capsys.readouterr()
    return workdir


def test_generate_writes_graph_and_manifest(workdir, capsys):
    code = run("generate", "--nodes", 500, "--m", 3, "--seed-nodes", 5,
               "--seed", 9, "--out", "g.txt")
    assert code == 0
    out = capsys.readouterr().out
    assert "edges=1485" in out  # (500 - 5) * 3
    g = load_edge_list("g.txt")
    assert g.node_count == 500
    manifest = json.loads((workdir / "g.txt.manifest.json").read_text())
    assert manifest["command"] == "generate"
    assert manifest["seeds"] == {"generation": 9}
    assert manifest["outputs"] == ["g.txt"]
    first_line = (workdir / "g.txt").read_text().splitlines()[0]
    assert first_line == "# manifest: g.txt.manifest.json"


def test_generate_invalid_config_exits_2(workdir, capsys):
    assert run("generate", "--nodes", 5, "--out", "g.txt") == 2
    assert "error:" in capsys.readouterr().err


def test_generate_unwritable_path_exits_3(workdir, capsys):
    assert run("generate", "--nodes", 50, "--m", 2, "--seed-nodes", 2,
               "--out", "no/such/dir/g.txt") == 3


def test_estimate_ground_truth(generated, capsys):
    assert run("estimate", "--graph", "graph.txt", "--ground-truth",
               "--out", "params.json") == 0
    doc = json.loads((generated / "params.json").read_text())
    k_min, d_avg = doc["k_min"], doc["d_avg"]
    assert doc["n_est"] == 2000
    assert doc["gamma"] == 2 + k_min / (d_avg - k_min)
    assert doc["mode"] == "ground_truth"
    assert doc["manifest"] == "params.json.manifest.json"
    out = capsys.readouterr().out
    assert "ground_truth" in out


def test_estimate_by_walk(generated, capsys):
    assert run("estimate", "--graph", "graph.txt", "--samples", 300,
               "--seed", 3, "--out", "params.json") == 0
    p = load_params(generated / "params.json")
    assert p.walk_meta["sample_count"] == 300
    assert p.walk_meta["seed"] == 3
    assert p.n_est > 0
    out = capsys.readouterr().out
    assert "walk steps used:" in out


def test_estimate_budget_flag(generated, capsys):
    # --budget 30000 -> 1% -> 300 samples
    assert run("estimate", "--graph", "graph.txt", "--budget", 30000,
               "--seed", 3, "--out", "p.json") == 0
    p = load_params(generated / "p.json")
    assert p.walk_meta["sample_count"] == 300


def test_estimate_needs_samples_or_budget(generated, capsys):
    assert run("estimate", "--graph", "graph.txt", "--out", "p.json") == 2


def test_estimate_missing_graph_exits_3(workdir, capsys):
    assert run("estimate", "--graph", "nope.txt", "--samples", 10,
               "--out", "p.json") == 3


def test_estimate_malformed_graph_exits_3(workdir, capsys):
    (workdir / "bad.txt").write_text("0 zero\n")
    assert run("estimate", "--graph", "bad.txt", "--samples", 10,
               "--out", "p.json") == 3


def test_estimate_regular_graph_exits_2(workdir, capsys):
    from degreerank import build_graph

    cycle = build_graph([(i, (i + 1) % 30) for i in range(30)])
    save_edge_list(cycle, workdir / "cycle.txt")
    assert run("estimate", "--graph", "cycle.txt", "--samples", 40,
               "--thin", 1, "--burn-in", 10, "--out", "p.json") == 2


def test_predict_boundaries_and_clamp(generated, capsys):
    run("estimate", "--graph", "graph.txt", "--ground-truth", "--out", "params.json")
    capsys.readouterr()

    doc = json.loads((generated / "params.json").read_text())
    assert run("predict", "--params", "params.json", "--degree", doc["k_max"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1.0, abs=1e-9)

    assert run("predict", "--params", "params.json", "--degree", doc["k_min"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(doc["n_est"] + 1, rel=1e-9)

    assert run("predict", "--params", "params.json", "--degree", doc["k_min"],
               "--clamp") == 0
    assert float(capsys.readouterr().out) == doc["n_est"]


def test_predict_all_degrees(generated, capsys):
    run("estimate", "--graph", "graph.txt", "--ground-truth", "--out", "params.json")
    doc = json.loads((generated / "params.json").read_text())
    capsys.readouterr()
    assert run("predict", "--params", "params.json", "--all-degrees") == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "degree,predicted_rank"
    assert len(lines) == 1 + doc["k_max"] - doc["k_min"] + 1
    ranks = [float(ln.split(",")[1]) for ln in lines[1:]]
    assert all(a > b for a, b in zip(ranks, ranks[1:]))


def test_predict_invalid_degree_exits_2(generated, capsys):
    run("estimate", "--graph", "graph.txt", "--ground-truth", "--out", "params.json")
    assert run("predict", "--params", "params.json", "--degree", 0) == 2


def test_evaluate_outputs_and_self_consistency(generated, capsys):
    run("estimate", "--graph", "graph.txt", "--samples", 300, "--seed", 3,
        "--out", "params.json")
    capsys.readouterr()
    assert run("evaluate", "--graph", "graph.txt", "--params", "params.json",
               "--table-out", "table.csv", "--report-out", "report.json") == 0
    out = capsys.readouterr().out
    assert "average_error=" in out

    table = load_rank_table(generated / "table.csv")
    report = load_report(generated / "report.json")
    # stats recomputed from the emitted CSV match the report exactly
    assert report_from_table(table, report.network_size) == report
    assert report.network_size == 2000


def test_evaluate_ground_truth_params(generated, capsys):
    assert run("evaluate", "--graph", "graph.txt", "--ground-truth-params",
               "--table-out", "t.csv", "--report-out", "r.json") == 0
    assert load_report(generated / "r.json").average_error >= 0


def test_sweep_writes_runs_and_summary(workdir, capsys):
    code = run("sweep", "--sizes", 400, "--repeats", 2, "--out-dir", "runs",
               "--sample-pct", 5.0)
    assert code == 0
    for rep in range(2):
        run_dir = workdir / "runs" / f"n400_r{rep}"
        assert (run_dir / "params.json").exists()
        assert (run_dir / "table.csv").exists()
        assert (run_dir / "report.json").exists()
        manifest = json.loads((run_dir / "run.manifest.json").read_text())
        assert manifest["parameters"]["nodes"] == 400
    lines = (workdir / "runs" / "summary.csv").read_text().splitlines()
    assert lines[1] == "nodes,average_error_mean,average_error_std,pct_error_mean,runs"
    fields = lines[2].split(",")
    assert fields[0] == "400" and fields[4] == "2"
    assert (workdir / "runs" / "sweep.manifest.json").exists()


def test_repeat_run_is_byte_identical(workdir, capsys):
    for d in ("one", "two"):
        (workdir / d).mkdir()
    import os

    for d in ("one", "two"):
        os.chdir(workdir / d)
        run("generate", "--nodes", 800, "--seed", 4, "--out", "graph.txt")
        run("estimate", "--graph", "graph.txt", "--samples", 200, "--seed", 6,
            "--out", "params.json")
    os.chdir(workdir)
    for name in ("graph.txt", "graph.txt.manifest.json", "params.json",
                 "params.json.manifest.json"):
        assert (workdir / "one" / name).read_bytes() == (workdir / "two" / name).read_bytes()
