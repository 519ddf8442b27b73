"""End-to-end command tests driven through main(argv) in-process."""

import json
import math

import pytest

from cyclospect.cli import main

TRI = "0 1\n1 2\n2 0\n2 3\n"


@pytest.fixture
def tri_path(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(TRI)
    return p


def run(argv):
    return main([str(a) for a in argv])


def test_complexity_artifacts(tri_path, tmp_path, capsys):
    out = tmp_path / "out"
    assert run(["complexity", "--input", tri_path, "--out-dir", out]) == 0
    for name in ("report.json", "eigenvalues.csv", "spectrum.svg"):
        assert (out / name).exists(), name
    doc = json.loads((out / "report.json").read_text())
    assert doc["complexity"]["K"] == 4
    # node 2 leaks half its weight to the sink, scaling the cycle roots to (1/2)^(1/3);
    # report floats carry 7 significant digits, hence the loose tolerance
    expect = 0.5 + 3 * (1 - 0.5 ** (1 / 3)) / 4
    assert math.isclose(doc["complexity"]["F"], expect, abs_tol=1e-6)
    assert doc["total_complexity"]["C"] == doc["complexity"]["F"]
    assert doc["graph"]["node_count"] == 4
    summary = capsys.readouterr().out
    assert "F =" in summary
    assert "artifacts" in summary


def test_complexity_rerun_is_byte_identical(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["complexity", "--input", tri_path, "--out-dir", out]) == 0
    first = {n: (out / n).read_bytes() for n in ("report.json", "spectrum.svg")}
    assert run(["complexity", "--input", tri_path, "--out-dir", out]) == 0
    for name, blob in first.items():
        assert (out / name).read_bytes() == blob, name


def test_cluster_artifacts(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["cluster", "--input", tri_path, "--out-dir", out]) == 0
    names = (
        "report.json",
        "eigenvalues.csv",
        "clusters.json",
        "clusters.dot",
        "ratios.csv",
        "curve.csv",
        "spectrum.svg",
        "curve.svg",
    )
    for name in names:
        assert (out / name).exists(), name
    doc = json.loads((out / "report.json").read_text())
    assert doc["clustering"]["k_min"] == 3
    assert doc["clustering"]["cluster_sizes"] == [1, 1, 1]
    assert doc["clustering"]["sink_cluster_size"] == 1
    assert "fiedler" in doc
    clusters = json.loads((out / "clusters.json").read_text())
    assert clusters["sink_cluster"] == [3]
    assert (out / "clusters.dot").read_text().startswith("digraph clusters {")
    assert (out / "ratios.csv").read_text().splitlines()[0] == "mode,from,to,edge_count,ratio"


def test_cluster_no_fiedler(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["cluster", "--input", tri_path, "--out-dir", out, "--no-fiedler"]) == 0
    doc = json.loads((out / "report.json").read_text())
    assert "fiedler" not in doc


def test_cluster_zero_components_flag(tri_path, tmp_path):
    out = tmp_path / "out"
    code = run(
        ["cluster", "--input", tri_path, "--out-dir", out, "--zero-components-to-sectors"]
    )
    assert code == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["config"]["zero_components_to_sectors"] is True


def test_energy_report(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["energy", "--input", tri_path, "--out-dir", out]) == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["energy"]["energy"] > 0
    assert doc["energy"]["symmetrized"] is False

    out2 = tmp_path / "out2"
    assert run(["energy", "--input", tri_path, "--out-dir", out2, "--symmetrize"]) == 0
    doc2 = json.loads((out2 / "report.json").read_text())
    assert doc2["energy"]["symmetrized"] is True
    assert doc2["energy"]["energy"] != doc["energy"]["energy"]


def test_fiedler_report(tmp_path):
    src = tmp_path / "path4.txt"
    src.write_text("0 1\n1 2\n2 3\n1 0\n2 1\n3 2\n")
    out = tmp_path / "out"
    assert run(["fiedler", "--input", src, "--out-dir", out, "--scope", "full"]) == 0
    doc = json.loads((out / "report.json").read_text())
    sizes = sorted(doc["fiedler"]["cluster_sizes"])
    assert sizes == [2, 2]
    assert (out / "clusters.json").exists()
    assert (out / "ratios.csv").exists()


def test_baseline_sweep_smoke(tmp_path):
    out = tmp_path / "out"
    code = run(
        [
            "baseline-sweep",
            "--n", "40",
            "--degrees", "2,3",
            "--realizations", "2",
            "--seed", "7",
            "--out-dir", out,
        ]
    )
    assert code == 0
    doc = json.loads((out / "report.json").read_text())
    assert [row["degree"] for row in doc["baseline"]["rows"]] == [2.0, 3.0]
    lines = (out / "curve.csv").read_text().splitlines()
    assert lines[0] == "degree,mean_F,std_F,mean_radial,mean_angular"
    assert len(lines) == 3
    assert (out / "curve.svg").exists()


def test_csv_input_format(tmp_path):
    src = tmp_path / "g.csv"
    src.write_text("src,dst,weight\n0,1,2.0\n1,2,1.0\n2,0,1.0\n")
    out = tmp_path / "out"
    assert run(["complexity", "--input", src, "--format", "csv", "--out-dir", out]) == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["graph"]["edge_count"] == 3


def test_node_weights_option(tri_path, tmp_path):
    weights = tmp_path / "alpha.csv"
    weights.write_text("node,alpha\n0,2.5\n1,0.5\n2,1.0\n3,1.0\n")
    out = tmp_path / "out"
    code = run(
        [
            "complexity",
            "--input", tri_path,
            "--node-weights", weights,
            "--out-dir", out,
            "--W", "1.0",
        ]
    )
    assert code == 0
    doc = json.loads((out / "report.json").read_text())
    assert math.isclose(doc["total_complexity"]["sum_alpha"], 5.0, abs_tol=1e-12)


def test_scope_largest_scc(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["complexity", "--input", tri_path, "--scope", "largest_scc", "--out-dir", out]) == 0
    doc = json.loads((out / "report.json").read_text())
    # the sink falls outside the dominant strongly connected component
    assert doc["graph"]["node_count"] == 3
    assert math.isclose(doc["complexity"]["F"], 2.0 / 3.0, abs_tol=1e-6)


def test_w_inf_spelling(tri_path, tmp_path):
    out = tmp_path / "out"
    assert run(["complexity", "--input", tri_path, "--W", "infinity", "--out-dir", out]) == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["total_complexity"]["W"] == "inf"


def test_exit_code_missing_file(tmp_path, capsys):
    assert run(["complexity", "--input", tmp_path / "nope.txt", "--out-dir", tmp_path / "o"]) == 6
    assert "error:" in capsys.readouterr().err


def test_exit_code_empty_input(tmp_path, capsys):
    src = tmp_path / "empty.txt"
    src.write_text("# only a comment\n")
    assert run(["complexity", "--input", src, "--out-dir", tmp_path / "o"]) == 3
    assert "error:" in capsys.readouterr().err


def test_exit_code_parse_failure(tmp_path, capsys):
    src = tmp_path / "bad.txt"
    src.write_text("0 1\nnot an edge\n")
    assert run(["complexity", "--input", src, "--out-dir", tmp_path / "o"]) == 3
    assert "line 2" in capsys.readouterr().err


def test_exit_code_invalid_config(tmp_path, capsys):
    code = run(["baseline-sweep", "--realizations", "0", "--out-dir", tmp_path / "o"])
    assert code == 2
    capsys.readouterr()


def test_exit_code_no_cycle(tmp_path, capsys):
    src = tmp_path / "chain.txt"
    src.write_text("0 1\n1 2\n")
    assert run(["cluster", "--input", src, "--out-dir", tmp_path / "o"]) == 4
    assert "error:" in capsys.readouterr().err


def test_unknown_flag_raises_argparse_exit(tri_path, tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["complexity", "--input", tri_path, "--bogus"])
    assert exc.value.code == 2


def test_module_entry_point(tri_path, tmp_path):
    import subprocess
    import sys

    out = tmp_path / "out"
    proc = subprocess.run(
        [sys.executable, "-m", "cyclospect", "complexity", "--input", str(tri_path), "--out-dir", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out / "report.json").exists()
