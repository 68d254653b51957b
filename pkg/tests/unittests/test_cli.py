# coding=utf-8
"""
Unit tests for the koszulkit command line
"""
import json
import logging
from fractions import Fraction
from logging.handlers import RotatingFileHandler

import mock
import pytest

from koszulkit.cli import build_parser, configure_logging, emit, run
from koszulkit.exceptions import ModuleException
from koszulkit.lookup_dicts import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestParser(object):
    def test_subcommands(self):
        args = build_parser().parse_args(["koszul", "--family", "FI", "--interval", "0", "3", "--depth", "2"])
        assert args.command == "koszul"
        assert args.interval == [0, 3]
        assert args.depth == 2
        assert args.loglevel == "WARNING"

    def test_essential_needs_other(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["essential-check", "--family", "FI"])


class TestRun(object):
    def test_validate_to_file(self, tmp_path):
        out = tmp_path / "report.json"
        code = run(["validate", "--family", "FI", "--interval", "0", "2", "--out", str(out)])
        assert code == EXIT_OK
        document = json.loads(out.read_text())
        assert document["command"] == "validate"
        assert document["passed"] is True
        assert document["validation"]["passed"] is True
        assert document["conditions"]["kind"] == "conditions"

    def test_koszul(self, capsys):
        code, document = run_json(capsys, ["koszul", "--family", "FI", "--interval", "0", "3"])
        assert code == EXIT_OK
        assert sorted(document["certificates"]) == ["0", "1", "2", "3"]
        assert document["certificates"]["1"]["steps"][1]["top"] == {"2,1": 2}

    def test_betti(self, capsys):
        code, document = run_json(capsys, ["betti", "--family", "FI", "--interval", "0", "3", "--x", "1"])
        assert code == EXIT_OK
        assert document["betti"]["1"]["1"] == {"2,1": 2}
        assert document["betti"]["1"]["2"] == {"3,2": 3}

    def test_dual(self, capsys):
        code, document = run_json(capsys, ["dual", "--family", "FI", "--interval", "0", "2"])
        assert code == EXIT_OK
        assert document["quadratic"] is True
        assert document["dims"]["0,2"] == 1
        assert document["relation_dims"] == {"0": 1}

    def test_opposite(self, capsys):
        code, document = run_json(capsys, ["opposite", "--family", "FI", "--interval", "0", "2"])
        assert code == EXIT_OK
        assert "opposite" in document["category"]

    def test_essential_check(self, capsys):
        argv = [
            "essential-check",
            "--family",
            "FI_prime_gamma",
            "--gamma",
            "cyclic:2",
            "--other",
            "FI_gamma",
            "--interval",
            "0",
            "2",
        ]
        code, document = run_json(capsys, argv)
        assert code == EXIT_OK
        assert document["essential"]["passed"] is True

    def test_inline_spec(self, capsys):
        code, document = run_json(capsys, ["quadratic", "--spec", '{"family": "FI", "interval": [0, 3]}'])
        assert code == EXIT_OK
        assert document["quadratic"]["passed"] is True

    def test_spec_file_and_interval_override(self, capsys, tmp_path):
        spec = tmp_path / "fi_d.json"
        spec.write_text(json.dumps({"family": "FI_d", "d": 2, "interval": [0, 3]}))
        code, document = run_json(capsys, ["decompose", "--spec", str(spec), "--interval", "0", "2", "--x", "1"])
        assert code == EXIT_OK
        assert document["decomposition"]["subject"].endswith("on [0, 2]")

    def test_failing_check(self, capsys):
        code, document = run_json(capsys, ["twist-check", "--family", "FI", "--interval", "0", "3", "--no-signs"])
        assert code == EXIT_CHECK_FAILED
        assert document["passed"] is False
        assert document["twist"]["results"][0]["witness"]["x"] == 0

    def test_module_exception_is_a_check_failure(self, capsys):
        error = ModuleException("resolution is not linear", {"fiber": [1, 0]})
        with mock.patch("koszulkit.cli.koszul_certificate", side_effect=error):
            code, document = run_json(capsys, ["koszul", "--family", "FI", "--interval", "0", "2"])
        assert code == EXIT_CHECK_FAILED
        assert document["witness"] == {"fiber": [1, 0]}
        assert document["command"] == "koszul"

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["koszul"],
            ["koszul", "--family", "FI", "--spec", "{}"],
            ["koszul", "--spec", "{not json"],
            ["koszul", "--family", "NOPE"],
            ["koszul", "--family", "FI", "--interval", "0", "3", "--x", "1", "--depth", "3"],
            ["koszul", "--family", "FI", "--interval", "0", "3", "--x", "5"],
            ["decompose", "--family", "FI", "--interval", "0", "3"],
            ["twist-check", "--family", "VI", "--q", "2", "--interval", "0", "2"],
            ["validate", "--family", "VI", "--q", "4"],
        ],
        ids=[
            "no command",
            "no family",
            "spec and family",
            "bad json",
            "unknown family",
            "past the window",
            "x outside",
            "decompose without x",
            "twist without rho",
            "unsupported field",
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(argv) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_help(self, capsys):
        assert run(["--help"]) == EXIT_OK


class TestOutput(object):
    def test_emit_converts_exact_values(self, capsys):
        emit({"a": Fraction(1, 2), (1, 2): True})
        assert json.loads(capsys.readouterr().out) == {"1,2": True, "a": "1/2"}

    def test_configure_logging_replaces_its_handler(self, tmp_path):
        logfile = str(tmp_path / "koszulkit.log")
        configure_logging("DEBUG", logfile)
        logger = configure_logging("INFO", logfile)
        ours = [h for h in logger.handlers if getattr(h, "koszulkit_cli", False)]
        assert len(ours) == 1
        assert isinstance(ours[0], RotatingFileHandler)
        assert logger.level == logging.INFO
        configure_logging()
