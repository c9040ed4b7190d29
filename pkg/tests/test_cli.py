"""
Test suite for the gravicav command line.
"""

import csv
import json

import pytest

from gravicav.cli import EXIT_CONFIG, EXIT_FAILURE, EXIT_OK, build_parser, main
from tests.conftest import make_scenario


class TestMain:

    def test_no_command_prints_help(self, capsys):
        assert main([]) == EXIT_OK
        assert "simulate" in capsys.readouterr().out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "gravicav" in capsys.readouterr().out


class TestSweepVariance:

    def test_writes_outputs(self, tmp_path):
        prefix = str(tmp_path / "sweep")
        assert main(["sweep-variance", "--samples", "101", "--output", prefix]) == EXIT_OK
        with open(prefix + ".csv", newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["t", "F", "mean_quadrature", "variance", "D"]
        assert len(rows) == 102
        assert json.loads((tmp_path / "sweep.json").read_text(encoding="utf-8"))["status"] == "pass"

    def test_printed_convention_still_exits_zero(self, tmp_path):
        prefix = str(tmp_path / "sweep")
        assert main(["sweep-variance", "--samples", "101", "--convention", "printed", "-o", prefix]) == EXIT_OK

    @pytest.mark.parametrize("argv", [["--samples", "1"], ["--D", "0"], ["--fmax", "-1"]])
    def test_invalid_arguments(self, tmp_path, argv):
        assert main(["sweep-variance", "-o", str(tmp_path / "x")] + argv) == EXIT_CONFIG
        assert not (tmp_path / "x.csv").exists()


class TestSimulate:

    def test_thermal_config(self, scenario_file, tmp_path):
        path = scenario_file({"name": "thermal", "kind": "thermal_check"})
        out = tmp_path / "out"
        assert main(["simulate", path, "-d", str(out)]) == EXIT_OK
        assert (out / "thermal.json").exists()

    def test_report_file(self, scenario_file, tmp_path):
        path = scenario_file(make_scenario(), {"name": "bch", "kind": "bch_verify"})
        report = tmp_path / "report.json"
        assert main(["simulate", path, "-d", str(tmp_path), "--jobs", "2", "--report", str(report)]) == EXIT_OK
        data = json.loads(report.read_text(encoding="utf-8"))
        assert [r["name"] for r in data["runs"]] == ["test_vacuum", "bch"]

    def test_failing_scenario(self, scenario_file, tmp_path):
        path = scenario_file({"name": "thermal", "kind": "thermal_check", "q": 0.1, "epsilon_max": 1e-3})
        assert main(["simulate", path, "-d", str(tmp_path)]) == EXIT_FAILURE

    def test_invalid_config(self, scenario_file, tmp_path, capsys):
        path = scenario_file(make_scenario(kind="dark_matter"))
        assert main(["simulate", path, "-d", str(tmp_path)]) == EXIT_CONFIG
        assert "UNKNOWN_KIND" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["simulate", str(tmp_path / "nope.json")]) == EXIT_CONFIG

    def test_empty_config(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("", encoding="utf-8")
        assert main(["simulate", str(path), "-d", str(tmp_path)]) == EXIT_OK

    def test_budget_flag_validation(self, scenario_file):
        path = scenario_file(make_scenario())
        with pytest.raises(SystemExit) as exc:
            main(["simulate", path, "--budget", "2"])
        assert exc.value.code == 2


class TestVerify:

    def test_bad_environment_budget(self, monkeypatch):
        monkeypatch.setenv("GRAVICAV_BUDGET", "abc")
        assert main(["verify"]) == EXIT_CONFIG

    def test_small_budget_fails(self, tmp_path):
        report = tmp_path / "verify.json"
        assert main(["verify", "--budget", "100", "--report", str(report)]) == EXIT_FAILURE
        data = json.loads(report.read_text(encoding="utf-8"))
        assert data["summary"]["fail"] == 3


class TestOptionScope:

    @pytest.mark.parametrize("argv", [
        ["verify", "--frame", "lab"],
        ["verify", "--convention", "printed"],
        ["acceptance", "--frame", "lab"],
        ["sweep-variance", "--variant", "paper"],
        ["sweep-variance", "--frame", "lab"],
    ])
    def test_unused_options_rejected(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        assert "unrecognized arguments" in capsys.readouterr().err

    def test_simulate_takes_model_options(self):
        args = build_parser().parse_args(["simulate", "c.json", "--frame", "lab", "--variant", "paper"])
        assert (args.frame, args.variant, args.convention) == ("lab", "paper", "corrected")
