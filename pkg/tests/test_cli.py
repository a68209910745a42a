"""Tests for the command-line surface: exit codes, text and JSON output"""
import json

import pytest

from annihilator.curve import reiffen
from cli import build_parser, build_run_config, main
from commands.experiment import ExperimentTable, run_cell
from polyring.rational import format_rational
from utils.report_formatter import ReportFormatter


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    """One exit code per failure class"""

    def test_misses_origin(self, capsys):
        code, out, err = run(capsys, "kappa", "-f", "x^2-y^3+1")
        assert code == 4
        assert out == ""
        assert "error: curve does not pass through the origin" in err

    def test_constant(self, capsys):
        code, _, _ = run(capsys, "kappa", "-f", "7")
        assert code == 2

    def test_not_squarefree(self, capsys):
        code, _, _ = run(capsys, "kappa", "-f", "(x-y)^2")
        assert code == 3

    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, "kappa", "-f", "x^2-")
        assert code == 8
        assert "error: " in err

    def test_missing_poly(self, capsys):
        code, _, _ = run(capsys, "kappa")
        assert code == 8

    def test_zero_point_rejected(self, capsys):
        code, _, _ = run(capsys, "kappa", "-f", "x^2-y^3", "--point", "0,0")
        assert code == 8

    def test_order_cap(self, capsys):
        code, out, _ = run(capsys, "kappa", "-f", "x^4+y^5+x*y^4", "--max-d", "1", "--json")
        assert code == 6
        error = json.loads(out)["error"]
        assert error["code"] == 6
        assert error["data"]["trace"] == [{"d": 1, "m": 4}]

    def test_non_generic_point(self, capsys):
        code, _, _ = run(capsys, "kappa", "-f", "x^2-y^3", "--point", "1,0")
        assert code == 7

    def test_reiffen_parameters(self, capsys):
        code, _, _ = run(capsys, "experiment", "--p-range", "3..3")
        assert code == 8

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            main(["no-such-command"])


class TestCommands:
    """Successful runs"""

    def test_kappa_text(self, capsys):
        code, out, _ = run(capsys, "kappa", "-f", "x^2-y^3")
        assert code == 0
        assert "kappa = 1" in out
        assert "genericity point = 0,1" in out
        assert "  d=1 m=1" in out
        lines = out.splitlines()
        annihilator = lines[lines.index("annihilator:") + 1:]
        assert len(annihilator) == 3
        assert "  y^3*dy-x^2*dy+3*y^2" in annihilator

    def test_kappa_json(self, capsys):
        code, out, _ = run(capsys, "kappa", "-f", "x^2-y^3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["kappa"] == 1
        assert data["curve_multiplicity"] == 2
        assert data["genericity_point"] == ["0", "1"]
        assert [row["m"] for row in data["trace"]] == [1]
        assert "total" in data["timings_ms"]

    def test_text_is_reproducible(self, capsys):
        _, first, _ = run(capsys, "kappa", "-f", "x^2-y^3")
        _, second, _ = run(capsys, "kappa", "-f", "x^2-y^3")
        assert first == second

    def test_ann(self, capsys):
        code, out, _ = run(capsys, "ann", "-f", "x", "-a", "3", "-d", "4", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["d"] == 4 and data["a"] == 3
        assert data["generators"] == ["dx^4", "x*dx-3"]

    def test_ann_below_jump(self, capsys):
        """Ann^(1) = Ann^(2) = Ann^(3) = <x*dx-3> for x^3"""
        for d in ("1", "2", "3"):
            code, out, _ = run(capsys, "ann", "-f", "x", "-a", "3", "-d", d, "--json")
            assert code == 0
            assert json.loads(out)["generators"] == ["x*dx-3"]

    def test_ann_text(self, capsys):
        code, out, _ = run(capsys, "ann", "-f", "x^2-y^3", "-d", "1")
        assert code == 0
        assert out.startswith("Ann^(1)(f^-1):")
        assert len(out.strip().splitlines()) == 4
        assert "  y^3*dy-x^2*dy+3*y^2" in out.splitlines()

    def test_ann_needs_order(self, capsys):
        code, _, _ = run(capsys, "ann", "-f", "x")
        assert code == 8

    def test_char_ideal_with_point(self, capsys):
        code, out, _ = run(capsys, "char-ideal", "-f", "x^2-y^3", "-d", "1", "--point", "0,1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["dimension"] == 2
        assert data["point"] == ["0", "1"]
        assert data["m"] == 1

    def test_genericity(self, capsys):
        code, out, _ = run(capsys, "genericity", "-f", "x^2-y^3", "--point", "1,0")
        assert code == 0
        assert "is not generic" in out

    def test_genericity_ladder(self, capsys):
        code, out, _ = run(capsys, "genericity", "-f", "x^2-y^3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["generic"] and data["point"] == ["0", "1"]
        assert data["rejected"] == []

    def test_reiffen(self, capsys):
        code, out, _ = run(capsys, "reiffen", "-p", "4")
        assert code == 0
        assert out.strip() == str(reiffen(4, 5))

    def test_experiment_records_failures(self, capsys):
        code, out, _ = run(capsys, "experiment", "--p-range", "4..4", "--max-d", "1", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert len(rows) == 1
        assert rows[0]["kappa"] is None
        assert rows[0]["error"]["code"] == 6


class TestRunConfig:
    """Flag parsing and validation"""

    def test_experiment_flags(self):
        args = build_parser().parse_args(["experiment", "--p-range", "4..6", "--q-offset", "2,1", "--jobs", "2"])
        config = build_run_config(args)
        assert config.p_values == [4, 5, 6]
        assert config.q_offsets == [1, 2]
        assert config.jobs == 2
        assert config.output == "text"

    def test_point_and_max_d(self):
        args = build_parser().parse_args(["kappa", "-f", "x", "--point", "1/2,-1", "--max-d", "3", "--json"])
        config = build_run_config(args)
        assert [format_rational(c) for c in config.point] == ["1/2", "-1"]
        assert config.skip_ladder
        assert config.kappa_config().max_d == 3
        assert config.json


class TestExperiment:
    """Grid cells and the result table"""

    def test_failed_cell(self):
        row = run_cell(4, 5, max_d=1)
        assert row["kappa"] is None
        assert row["error"]["code"] == 6
        assert row["m_trace"] == []

    def test_rows_carry_time_per_order(self):
        row = run_cell(4, 5, max_d=2)
        assert row["error"] is None
        assert row["m_trace"] == [4, 3]
        assert len(row["ms_per_d"]) == len(row["m_trace"]) == row["kappa"]

    def test_unexpected_error_stays_in_row(self, monkeypatch):
        def broken(f, config):
            raise ZeroDivisionError("division by zero")

        monkeypatch.setattr("commands.experiment.kappa_and_annihilator", broken)
        row = run_cell(4, 5)
        assert row["kappa"] is None
        assert row["error"] == {"code": 1, "message": "internal error: division by zero"}

    def test_parallel_matches_serial(self, capsys):
        argv = ["experiment", "--p-range", "4..4", "--q-offset", "1,2", "--max-d", "1", "--json"]
        serial_code, serial_out, _ = run(capsys, *argv)
        parallel_code, parallel_out, _ = run(capsys, *argv, "--jobs", "2")
        assert serial_code == parallel_code == 0

        def without_timings(out):
            return [{k: v for k, v in row.items() if k not in ("ms_per_d", "timings_ms")}
                    for row in json.loads(out)["rows"]]

        serial = without_timings(serial_out)
        assert serial == without_timings(parallel_out)
        assert [(r["p"], r["q"]) for r in serial] == [(4, 5), (4, 6)]
        assert all(r["error"]["data"]["trace"] == [{"d": 1, "m": 4}] for r in serial)

    def test_table_is_sorted(self):
        table = ExperimentTable()
        for p, q in [(5, 6), (4, 6), (4, 5)]:
            table.add({"p": p, "q": q, "kappa": 2, "m_trace": [], "error": None})
        assert [(r["p"], r["q"]) for r in table.rows] == [(4, 5), (4, 6), (5, 6)]
        assert table.failures == 0

    def test_formatter(self):
        rows = [
            {"p": 4, "q": 5, "kappa": 2, "m_trace": [4, 3], "error": None},
            {"p": 5, "q": 6, "kappa": None, "m_trace": [], "error": {"code": 6, "message": "cap"}},
        ]
        lines = ReportFormatter.experiment(rows).splitlines()
        assert lines[0].split() == ["p", "q", "kappa", "m^(d)"]
        assert lines[1].split() == ["4", "5", "2", "4,3"]
        assert lines[2].endswith("error 6: cap")


class TestRegistry:
    """Command discovery"""

    def test_discovers_all_commands(self, commands):
        assert set(commands.get_all_commands()) == {
            "ann", "char-ideal", "experiment", "genericity", "kappa", "reiffen",
        }

    def test_unknown_command(self, commands):
        with pytest.raises(KeyError):
            commands.get_command("screenshot")
