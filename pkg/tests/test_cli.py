import csv
import json

import numpy as np
import pytest

from qqmems.cli import EXIT_CHECK, EXIT_IO, EXIT_OK, EXIT_USAGE, main


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


class TestCurves:
    def test_blank_cells_outside_domains(self, tmp_path, capsys):
        out = tmp_path / "curves.csv"
        code, _, _ = run(["curves", "--p-min", "0.25", "--p-max", "0.25", "--p-steps", "1",
                          "-o", str(out)], capsys)
        assert code == EXIT_OK
        header, rows = read_csv(out)
        assert header == ["P", "N2", "N3", "Ndeg"]
        assert rows[0][1] == "" and rows[0][2] == ""
        assert abs(float(rows[0][3]) - 0.19371294336139652) < 1e-12

    def test_anchor_row_at_half(self, tmp_path, capsys):
        out = tmp_path / "curves.csv"
        code, _, _ = run(["curves", "--p-min", "0.5", "--p-max", "0.5", "--p-steps", "1",
                          "-o", str(out)], capsys)
        assert code == EXIT_OK
        _, rows = read_csv(out)
        assert float(rows[0][1]) == pytest.approx(0.5, abs=1e-15)
        assert float(rows[0][2]) == pytest.approx(2 / 3, abs=1e-12)
        assert float(rows[0][3]) == pytest.approx(2 / 3, abs=1e-12)

    def test_lf_line_endings_and_17_digits(self, tmp_path, capsys):
        out = tmp_path / "curves.csv"
        run(["curves", "--p-min", "0.3", "--p-max", "0.6", "--p-steps", "3", "-o", str(out)], capsys)
        raw = out.read_bytes()
        assert b"\r" not in raw
        # 17 significant digits round-trip float64 exactly
        _, rows = read_csv(out)
        val = float(rows[2][3])
        assert f"{val:.17g}" == rows[2][3]


class TestGap:
    def test_markers_and_zero_diff(self, tmp_path, capsys):
        out = tmp_path / "gap.csv"
        code, _, _ = run(["gap", "--p-min", "0.3", "--p-max", "0.5", "--p-steps", "2",
                          "-o", str(out)], capsys)
        assert code == EXIT_OK
        header, rows = read_csv(out)
        assert header == ["P", "Ndeg", "Nhed", "diff", "reason"]
        assert rows[0][2] == "" and rows[0][4] == "negative radicand"
        assert float(rows[1][3]) == 0.0


class TestCertify:
    def test_full_grid_passes(self, tmp_path, capsys):
        out = tmp_path / "certify.json"
        code, _, _ = run(["certify", "--p-steps", "10", "-o", str(out)], capsys)
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["all_verified"]
        assert data["count"] == 30

    def test_single_boundary_point_flags_asymptotic(self, capsys):
        code, out, _ = run(["certify", "--theorem", "rank2", "--p", "0.5"], capsys)
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["reports"][0]["asymptotic"]
        assert data["reports"][0]["verified"]

    def test_out_of_domain_is_usage_error(self, capsys):
        code, _, err = run(["certify", "--theorem", "rank2", "--p", "0.4"], capsys)
        assert code == EXIT_USAGE
        assert "usage error" in err

    def test_unachievable_tolerance_is_check_failure(self, tmp_path, capsys):
        code, _, err = run(["certify", "--theorem", "deg", "--p", "0.25",
                            "--tolerance", "1e-30", "-o", str(tmp_path / "x.json")], capsys)
        assert code == EXIT_CHECK
        assert "check failure" in err


class TestTgx:
    def test_determinism_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["tgx2", "--p-min", "0.5", "--p-max", "0.8", "--p-steps", "3", "--seed", "5",
                "--restarts", "8"]
        assert run(args + ["-o", str(a)], capsys)[0] == EXIT_OK
        assert run(args + ["-o", str(b)], capsys)[0] == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_tgx3_gap_column_small(self, tmp_path, capsys):
        out = tmp_path / "t3.csv"
        code, _, _ = run(["tgx3", "--p-min", "0.4", "--p-max", "0.8", "--p-steps", "3",
                          "--seed", "2", "-o", str(out)], capsys)
        assert code == EXIT_OK
        header, rows = read_csv(out)
        assert header == ["P", "tgx_max", "x_reference", "gap"]
        assert all(abs(float(r[3])) < 1e-8 for r in rows)

    def test_below_domain_is_usage_error(self, capsys):
        code, _, _ = run(["tgx2", "--p-min", "0.3", "--p-max", "0.6"], capsys)
        assert code == EXIT_USAGE


class TestAcs:
    def test_summary_and_trace(self, tmp_path, capsys):
        out, tr = tmp_path / "acs.csv", tmp_path / "trace.csv"
        code, _, _ = run(["acs", "--runs", "5", "--seed", "1", "-o", str(out),
                          "--trace-output", str(tr)], capsys)
        assert code == EXIT_OK
        header, rows = read_csv(out)
        assert header == ["P", "seed", "best_value", "n_deg_reference", "deviation",
                          "rounds", "converged"]
        assert len(rows) == 5
        t_header, t_rows = read_csv(tr)
        assert t_header == ["run_index", "P", "round", "value"]
        # trace values are nondecreasing within each run
        by_run = {}
        for r in t_rows:
            by_run.setdefault(r[0], []).append(float(r[3]))
        for vals in by_run.values():
            assert all(b - a >= -1e-12 for a, b in zip(vals, vals[1:]))

    def test_zero_runs_gives_header_only(self, tmp_path, capsys):
        out = tmp_path / "acs.csv"
        code, _, _ = run(["acs", "--runs", "0", "-o", str(out)], capsys)
        assert code == EXIT_OK
        header, rows = read_csv(out)
        assert header[0] == "P" and rows == []


class TestProp1:
    def test_report_and_exit(self, tmp_path, capsys):
        out = tmp_path / "prop1.txt"
        code, _, _ = run(["prop1", "--count", "200", "--seed", "0", "-o", str(out)], capsys)
        assert code == EXIT_OK
        text = out.read_text()
        assert "violations (|brute-force - closed form| > 1e-12): 0" in text
        assert "(4, 6, 1, 5)" in text

    def test_determinism(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run(["prop1", "--count", "100", "--seed", "9", "-o", str(a)], capsys)
        run(["prop1", "--count", "100", "--seed", "9", "-o", str(b)], capsys)
        assert a.read_bytes() == b.read_bytes()


class TestState:
    def test_deg_lower_branch_spectrum(self, capsys):
        code, out, _ = run(["state", "--family", "deg", "--p", "0.3"], capsys)
        assert code == EXIT_OK
        data = json.loads(out)
        h = np.sqrt(6 * 0.3 / 5 - 0.2)
        assert data["spectrum"][3] == pytest.approx((1 - 2 * h) / 6, abs=1e-12)
        assert data["purity"] == pytest.approx(0.3, abs=1e-12)

    def test_rank2_at_half_spectrum(self, capsys):
        code, out, _ = run(["state", "--family", "rank2", "--p", "0.5"], capsys)
        assert code == EXIT_OK
        data = json.loads(out)
        np.testing.assert_allclose(data["spectrum"], [0.5, 0.5, 0, 0, 0, 0], atol=1e-12)

    def test_uniform_spectrum_family_zero_negativity(self, capsys):
        lam = ",".join(["0.16666666666666666"] * 5 + ["0.1666666666666667"])
        code, out, _ = run(["state", "--family", "spectrum", "--spectrum", lam], capsys)
        assert code == EXIT_OK
        assert json.loads(out)["negativity"] == 0.0

    def test_missing_arguments_are_usage_errors(self, capsys):
        assert run(["state", "--family", "deg"], capsys)[0] == EXIT_USAGE
        assert run(["state", "--family", "nope", "--p", "0.5"], capsys)[0] == EXIT_USAGE
        assert run(["state", "--family", "rank2", "--p", "0.2"], capsys)[0] == EXIT_USAGE


class TestConfigAndErrors:
    def test_print_config_precedence(self, capsys, monkeypatch):
        monkeypatch.setenv("QQMEMS_SEED", "42")
        code, out, _ = run(["curves", "--print-config"], capsys)
        assert code == EXIT_OK
        assert json.loads(out)["seed"] == 42
        code, out, _ = run(["curves", "--seed", "7", "--print-config"], capsys)
        assert json.loads(out)["seed"] == 7

    def test_bad_env_value_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("QQMEMS_SEED", "not-a-number")
        assert run(["curves", "--print-config"], capsys)[0] == EXIT_USAGE

    def test_missing_subcommand(self, capsys):
        assert run([], capsys)[0] == EXIT_USAGE

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"], capsys)[0] == EXIT_USAGE

    def test_bad_grid(self, capsys):
        assert run(["curves", "--p-min", "0.8", "--p-max", "0.5"], capsys)[0] == EXIT_USAGE

    def test_io_error(self, capsys):
        code, _, err = run(["curves", "--p-min", "0.5", "--p-max", "0.6", "--p-steps", "2",
                            "-o", "/nonexistent-dir/x.csv"], capsys)
        assert code == EXIT_IO
        assert "i/o error" in err
