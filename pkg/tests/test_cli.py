"""End-to-end command-line checks: artifacts, exit codes, determinism."""

import csv
import json
from pathlib import Path

import pytest

from jhflow.cases import case_to_dict, get_case
from jhflow.cli import (
    EXIT_INVALID,
    EXIT_MISSING,
    EXIT_NUMERICAL,
    EXIT_OK,
    main,
    parse_table_range,
)
from jhflow.oracle import ShootingDiverged
from jhflow.polyalg import LaurentPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- argument plumbing ----------------------------------------------------------


def test_parse_table_range():
    assert parse_table_range("1-16") == list(range(1, 17))
    assert parse_table_range("1-4,9") == [1, 2, 3, 4, 9]
    assert parse_table_range("7") == [7]
    assert parse_table_range("") == []
    assert parse_table_range(" , ") == []
    with pytest.raises(ValueError):
        parse_table_range("4-1")
    with pytest.raises(ValueError):
        parse_table_range("one")


# -- run-case ---------------------------------------------------------------------


def test_run_case_plugin_artifacts(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "run-case", "--case", "5.1", "--paper-params",
        "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    assert manifest["case"] == "5.1"
    assert manifest["source"] == "published-solution"
    for key in (
        "comparison_velocity", "plot_velocity", "solution_velocity",
        "comparison_thermal", "plot_thermal", "solution_thermal",
    ):
        assert Path(manifest["files"][key]).exists()
    assert "fit_velocity" not in manifest["files"]

    lines = Path(manifest["files"]["comparison_velocity"]).read_text().strip().split("\n")
    assert lines[0] == "eta,numeric,ohpm,abs_error,paper_numeric,paper_ohpm,paper_hpm"
    assert len(lines) == 12
    row = dict(zip(lines[0].split(","), lines[10].split(",")))
    assert float(row["eta"]) == 0.9
    assert float(row["ohpm"]) == pytest.approx(0.0768721058679, abs=1e-12)
    assert float(row["abs_error"]) == pytest.approx(5.32169542503e-07, rel=1e-6)


def test_run_case_fit_mode_writes_records(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "run-case", "--case", "5.6", "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    assert manifest["source"] == "fit"
    for problem in ("velocity", "thermal"):
        record = json.loads(Path(manifest["files"][f"fit_{problem}"]).read_text())
        assert record["case"] == "5.6"
        assert record["problem"] == problem
        assert record["converged"] is True
        assert set(record) == {
            "case", "problem", "parameters", "objective", "converged",
            "maxGridErrorVsOracle",
        }
    assert manifest["maxAbsError"]["velocity"] <= 1e-5


def test_run_case_solution_payload_round_trips(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "run-case", "--case", "5.3", "--paper-params",
        "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    payload = json.loads(Path(manifest["files"]["solution_velocity"]).read_text())
    assert payload["case"] == "5.3"
    assert payload["problem"] == "velocity"
    poly = LaurentPoly.from_pairs(payload["polynomial"])
    bundled = get_case("5.3").paper_F
    for k in range(101):
        eta = k / 100.0
        assert poly.evaluate(eta) == bundled.evaluate(eta)  # bit-identical


def test_run_case_byte_identical_reruns(tmp_path, capsys):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    for out_dir in (out_a, out_b):
        code, _, _ = run_cli(
            capsys,
            "run-case", "--case", "5.5", "--paper-params",
            "--h", "1e-3", "--out", str(out_dir),
        )
        assert code == EXIT_OK
    for name in (
        "comparison_velocity_5.5.csv", "comparison_thermal_5.5.csv",
        "plot_velocity_5.5.csv", "plot_thermal_5.5.csv",
        "solution_velocity_5.5.json", "solution_thermal_5.5.json",
    ):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()


def test_run_case_unknown_id_exits_2(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "run-case", "--case", "5.9", "--out", str(tmp_path)
    )
    assert code == EXIT_INVALID
    payload = json.loads(err)
    assert payload["error"]["exitCode"] == EXIT_INVALID
    assert "5.9" in payload["error"]["message"]


def test_run_case_plugin_without_bundled_solution_exits_4(tmp_path, capsys):
    case_file = tmp_path / "bare.json"
    case_file.write_text(json.dumps(
        {"id": "bare", "alpha": 0.1, "Re": 25.0, "H": 10.0, "beta": 1e-13}
    ))
    code, _, err = run_cli(
        capsys,
        "run-case", "--case", str(case_file), "--paper-params",
        "--h", "1e-3", "--out", str(tmp_path / "out"),
    )
    assert code == EXIT_MISSING
    assert json.loads(err)["error"]["exitCode"] == EXIT_MISSING


def test_run_case_invalid_case_file_exits_2(tmp_path, capsys):
    case_file = tmp_path / "bad.json"
    case_file.write_text(json.dumps(
        {"id": "bad", "alpha": 0.0, "Re": 50.0, "H": 0.0}
    ))
    code, _, _ = run_cli(
        capsys, "run-case", "--case", str(case_file), "--out", str(tmp_path / "out")
    )
    assert code == EXIT_INVALID


# -- oracle -----------------------------------------------------------------------


def test_oracle_writes_both_solutions(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--case", "5.4", "--h", "1e-3", "--out", str(tmp_path)
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    vel_lines = Path(manifest["files"]["velocity"]).read_text().strip().split("\n")
    th_lines = Path(manifest["files"]["thermal"]).read_text().strip().split("\n")
    assert vel_lines[0] == "eta,F,dF,d2F"
    assert th_lines[0] == "eta,theta,dtheta"
    assert len(vel_lines) == len(th_lines) == 1002
    assert manifest["shootingParameter"] < 0.0


def test_oracle_numerical_failure_exits_3(tmp_path, capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise ShootingDiverged("terminal value does not change sign")

    monkeypatch.setattr("jhflow.cli.shoot_velocity", explode)
    code, _, err = run_cli(
        capsys, "oracle", "--case", "5.1", "--h", "1e-3", "--out", str(tmp_path)
    )
    assert code == EXIT_NUMERICAL
    assert json.loads(err)["error"]["type"] == "ShootingDiverged"


# -- fit ---------------------------------------------------------------------------


def test_fit_velocity_only(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "fit", "--case", "5.7", "--problem", "velocity",
        "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    record = json.loads(Path(manifest["files"]["velocity"]).read_text())
    assert record["converged"] is True
    assert record["maxGridErrorVsOracle"] <= 1e-5
    assert set(record["parameters"]) == {"C1", "C2", "C3", "C4", "C5", "C6", "C7"}


# -- reproduce-tables -----------------------------------------------------------------


def test_reproduce_tables_subset(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "reproduce-tables", "--tables", "1,2", "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    summary = json.loads(out)
    assert [t["table"] for t in summary["tables"]] == [1, 2]
    table_lines = (tmp_path / "table_01.csv").read_text().strip().split("\n")
    assert table_lines[0] == (
        "eta,numeric,ohpm,abs_error,paper_numeric,paper_ohpm,"
        "deviation_numeric,deviation_ohpm"
    )
    assert len(table_lines) == 12
    assert (tmp_path / "summary.json").exists()

    findings = json.loads((tmp_path / "findings.json").read_text())["findings"]
    ids = [f["id"] for f in findings]
    for required in (
        "thermal-seed-sign",
        "assembled-velocity-eta2-missing-factor",
        "thermal-constant-D-mismatch",
        "dissipation-weight-one-vs-H",
    ):
        assert required in ids
    for finding in findings:
        assert finding["evidence"], f"finding {finding['id']} lacks evidence"


def test_reproduce_tables_empty_selection(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys, "reproduce-tables", "--tables", "", "--out", str(tmp_path)
    )
    assert code == EXIT_OK
    assert json.loads(out)["tables"] == []


def test_reproduce_tables_unknown_number_exits_4(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "reproduce-tables", "--tables", "17", "--out", str(tmp_path)
    )
    assert code == EXIT_MISSING
    assert json.loads(err)["error"]["exitCode"] == EXIT_MISSING


def test_reproduce_tables_malformed_range_exits_2(tmp_path, capsys):
    code, _, _ = run_cli(
        capsys, "reproduce-tables", "--tables", "4-1", "--out", str(tmp_path)
    )
    assert code == EXIT_INVALID


# -- sweep -------------------------------------------------------------------------


def test_sweep_grid_and_failure_rows(tmp_path, capsys):
    # alpha = 1.5 rad is a hopeless configuration: its failure must be
    # recorded per row while the good cells still compute.
    code, out, _ = run_cli(
        capsys,
        "sweep", "--alphas", "0.1,1.5", "--hs", "0,100",
        "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    with open(tmp_path / "sweep.csv", newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["alpha", "H", "eta", "F", "theta", "error"]
    assert len(rows) == 1 + 4 * 11
    assert manifest["rows"] == 44
    good = [r for r in rows[1:] if r[5] == ""]
    errored = [r for r in rows[1:] if r[5] != ""]
    assert manifest["failedCells"] >= 1
    assert errored and all(r[3] == "" for r in errored)
    assert good and all(float(r[3]) == pytest.approx(1.0) for r in good if r[2] == "0")


def test_sweep_needs_values(tmp_path, capsys):
    code, _, _ = run_cli(
        capsys, "sweep", "--alphas", "", "--hs", "0", "--out", str(tmp_path)
    )
    assert code == EXIT_INVALID


# -- export-plot-data ------------------------------------------------------------------


def test_export_plot_data_csv(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "export-plot-data", "--case", "5.2", "--paper-params",
        "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    lines = Path(manifest["files"]["velocity"]).read_text().strip().split("\n")
    assert lines[0] == "eta,series,numeric"
    assert len(lines) == 102


def test_export_plot_data_json(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys,
        "export-plot-data", "--case", "5.2", "--paper-params",
        "--format", "json", "--h", "1e-3", "--out", str(tmp_path),
    )
    assert code == EXIT_OK
    manifest = json.loads(out)
    payload = json.loads(Path(manifest["files"]["thermal"]).read_text())
    assert payload["case"] == "5.2"
    assert len(payload["points"]) == 101
    eta, series, numeric = payload["points"][50]
    assert eta == 0.5
    bundled = get_case("5.2").paper_theta
    assert series == bundled.evaluate(0.5)


def test_mode_override_round_trips_case_fields(tmp_path, capsys):
    # Overriding the decomposition must not drop the bundled material.
    case_file = tmp_path / "full.json"
    case_file.write_text(json.dumps(case_to_dict(get_case("5.1"))))
    code, out, _ = run_cli(
        capsys,
        "export-plot-data", "--case", str(case_file), "--mode", "paper",
        "--paper-params", "--h", "1e-3", "--out", str(tmp_path / "out"),
    )
    assert code == EXIT_OK
