"""Contract tests for the anholonomy CLI binary."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ANHOLONOMY_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="ANHOLONOMY_CLI not set")


def run(*args, check=False):
    return subprocess.run([CLI, *args], capture_output=True, text=True, check=check)


def test_verify_small_register_passes():
    proc = run("verify", "--qubits", "2", "--steps", "64", "--no-timestamp")
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["schema"] == 1
    assert report["pass"] is True
    assert "timestamp" not in report
    for verdict in report["verdicts"]:
        assert verdict["pass"] is True
        assert "tolerance" in verdict
    assert report["analytic"]["gamma_mp"] == [-1.0, 0.0]


def test_reports_are_byte_identical_without_timestamps():
    args = ("verify", "--qubits", "1", "--steps", "64", "--no-timestamp")
    first, second = run(*args), run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout


def test_verify_with_timestamp_has_one():
    proc = run("verify", "--qubits", "1", "--steps", "64")
    report = json.loads(proc.stdout)
    assert "timestamp" in report


def test_track_csv_shape():
    proc = run("track", "--qubits", "1", "--steps", "64", "--cycles", "1")
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "step,lambda,track_id,eigenangle_unwrapped,analytic_m,match_quality"
    assert len(lines) == 1 + 65 * 2  # header + grid points x tracks
    last = lines[-1].split(",")
    assert last[0] == "64"
    assert last[2] == "1"


def test_spectrum_csv_and_json():
    csv = run("spectrum", "--qubits", "2", "--format", "csv")
    assert csv.returncode == 0
    assert csv.stdout.splitlines()[0] == "m,eigenangle,successor,winding,sigma"
    assert len(csv.stdout.strip().splitlines()) == 5

    js = run("spectrum", "--qubits", "2", "--no-timestamp")
    report = json.loads(js.stdout)
    assert report["analytic"]["permutation"] == [1, 2, 3, 0]


def test_holonomy_report():
    proc = run("holonomy", "--qubits", "1", "--steps", "64", "--no-timestamp")
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    numeric = report["numeric"]
    assert numeric["deviation_from_analytic"] < 1e-6
    # M(C) = -iY: entry (1, 0) is +1
    assert abs(numeric["holonomy"][1][0][0] - 1.0) < 1e-6


def test_negative_control_expected_outcome():
    proc = run("negative-control", "--steps", "64", "--no-timestamp")
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["outcome"]["degeneracy_detected"] is True
    assert report["outcome"]["note"] == "anholonomy absent: expected"


def test_usage_errors_exit_2():
    assert run("verify", "--qubits", "0").returncode == 2
    assert run("verify", "--steps", "32").returncode == 2
    assert run("nonsense").returncode == 2
    assert run().returncode == 2
    assert run("track", "--qubits", "1", "--format", "json").returncode == 2


def test_out_file_written(tmp_path):
    out = tmp_path / "report.json"
    proc = run("verify", "--qubits", "1", "--steps", "64", "--no-timestamp", "--out", str(out))
    assert proc.returncode == 0
    assert json.loads(out.read_text())["pass"] is True
    assert proc.stdout == ""
