"""End-to-end checks of the command-line tool (binary path via ISIENERGY_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ISIENERGY_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ISIENERGY_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def test_energy_family_complete():
    out = run("energy", "--family", "complete", "--n", "5")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert abs(data["energy"] - 16.0) < 1e-9
    assert data["n"] == 5


def test_json_round_trips_at_full_precision():
    out = run("energy", "--family", "star", "--n", "10")
    data = json.loads(out.stdout)
    # serialize-parse round trip recovers the exact double
    again = json.loads(json.dumps(data))
    assert again["energy"] == data["energy"]
    assert abs(data["energy"] - 5.4) < 1e-12


def test_bounds_graph6():
    out = run("bounds", "--graph6", "Bw")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["graph"] == "Bw"
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["trace_square_complete_max"]["equality"] is True
    assert by_name["energy_lower_det_stated"]["holds"] is False

    csv = run("bounds", "--graph6", "Bw", "--format", "csv")
    lines = csv.stdout.strip().splitlines()
    assert lines[0].startswith("graph,name,lower,value,upper")
    assert len(lines) == len(report["checks"]) + 1


def test_spectrum_and_index():
    out = run("spectrum", "--family", "complete", "--n", "4")
    data = json.loads(out.stdout)
    assert data["multiplicities"] == [1, 3]
    idx = json.loads(run("index", "--family", "path", "--n", "3").stdout)
    assert abs(idx["isi_index"] - 4 / 3) < 1e-12


def test_coulson_forms():
    for form in ("derivative", "log", "corollary"):
        out = run("coulson", "--family", "cycle", "--n", "4", "--coulson-form", form)
        data = json.loads(out.stdout)
        assert abs(data["energy"] - 4.0) < 1e-4
        assert abs(data["residual"]) < 1e-4


def test_conjecture():
    out = run("conjecture", "--n", "6")
    data = json.loads(out.stdout)
    assert data["tree_count"] == 6
    assert data["star_is_min"] is True
    assert data["path_is_max"] is True


def test_equienergetic_default_pair():
    out = run("equienergetic", "--iterate", "2", "--pad", "5")
    data = json.loads(out.stdout)
    assert data["construction"] == "isolated-padding"
    assert abs(data["energy1"] - 108.0) < 1e-6
    assert abs(data["energy2"] - 108.0) < 1e-6
    assert data["cospectral"] is False
    assert len(data["spectrum1"]) == 23


def test_batch_emits_one_record_per_line():
    stdin = "Bw\nnot graph6!\nA_\n"
    out = run("batch", "--input", "-", stdin=stdin)
    assert out.returncode == 0
    records = [json.loads(line) for line in out.stdout.strip().splitlines()]
    assert len(records) == 3
    assert abs(records[0]["energy"] - 4.0) < 1e-9
    assert "error" in records[1]
    assert records[1]["line"] == 2
    assert abs(records[2]["energy"] - 1.0) < 1e-12

    # empty lines also produce one (error) record each
    out = run("batch", "--input", "-", stdin="Bw\n\nA_\n")
    records = [json.loads(line) for line in out.stdout.strip().splitlines()]
    assert len(records) == 3
    assert "error" in records[1]


def test_edge_list_input(tmp_path):
    f = tmp_path / "k23.txt"
    f.write_text("5 6\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n")
    out = run("energy", "--edge-list", str(f))
    data = json.loads(out.stdout)
    assert abs(data["energy"] - 2 * 6**1.5 / 5) < 1e-9


def test_usage_errors_exit_2():
    assert run("energy").returncode == 2                      # no input source
    assert run("energy", "--graph6", "B\x20").returncode == 2  # malformed graph6
    assert run("energy", "--edge-list", "/nonexistent").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("energy", "--family", "cycle", "--n", "2").returncode == 2


def test_human_format():
    out = run("energy", "--family", "complete", "--n", "5", "--format", "human")
    assert out.returncode == 0
    assert "ISI energy" in out.stdout
