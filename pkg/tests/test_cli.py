"""Tests for the command-line entry point and its exit codes."""

import json
from pathlib import Path

import pytest

from cli import EXIT_CHECK, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE, run
from config.settings import StringLinkSettings
from models.run_config import RunConfig

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def fixture_path(name):
    return str(FIXTURES / f"{name}.mld")


def test_torsion_text(capsys):
    assert run(["torsion", fixture_path("clasp1")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "h1^-1 + h2^-1 - h1^-1*h2^-1"


def test_torsion_json(capsys):
    assert run(["--format", "json", "torsion", fixture_path("trefoil")]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["text"] == "h1 - 1 + h1^-1"
    assert len(payload["states"]) == 3
    assert payload["poly"][0] == {"exp2": [-2], "coeff": "1"}
    assert payload["canonical"] is True


def test_torsion_with_fox(capsys):
    assert run(["torsion", "--fox", fixture_path("clasp1")]) == EXIT_OK
    assert "fox unit: h1" in capsys.readouterr().out


def test_states_lists_each_state(capsys):
    assert run(["states", fixture_path("clasp1")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "NEN" in out
    assert "clock-connected: yes" in out


def test_homology_text(capsys):
    assert run(["homology", fixture_path("trefoil")]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "Z at F=(-1), d=-2 [status: homology (alternating)]"
    assert len(lines) == 3


def test_ops_mirror_prints_mld(capsys):
    assert run(["ops", "--mirror", fixture_path("trefoil")]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "strands 1"
    assert "x- 1" in out
    assert "x+ 1" not in out


def test_ops_amalgamate_needs_two_files(capsys):
    assert run(["ops", "--amalgamate", fixture_path("clasp1")]) == EXIT_USAGE


def test_ops_compose_strand_mismatch_is_computation_error(capsys):
    code = run(["ops", "--compose", fixture_path("clasp1"), fixture_path("trefoil")])
    assert code == EXIT_COMPUTATION


def test_unknown_command_is_usage_error():
    assert run(["frobnicate"]) == EXIT_USAGE


def test_missing_crossing_option_is_usage_error():
    assert run(["skein", fixture_path("trefoil")]) == EXIT_USAGE


def test_parse_error_is_computation_error(tmp_path, capsys):
    bad = tmp_path / "bad.mld"
    bad.write_text("strands 2\nx+ 5\n")
    assert run(["torsion", str(bad)]) == EXIT_COMPUTATION
    assert "line 2" in capsys.readouterr().err


def test_mixed_skein_without_flag_fails():
    assert run(["skein", fixture_path("clasp1"), "--crossing", "2"]) == EXIT_COMPUTATION


def test_export_writes_workbook(tmp_path):
    target = tmp_path / "report.xlsx"
    assert run(["export", fixture_path("clasp1"), "--output", str(target)]) == EXIT_OK
    assert target.read_bytes()[:2] == b"PK"


@pytest.fixture
def quick_check(monkeypatch):
    monkeypatch.setenv("RANDOM_BRAIDS", "5")
    monkeypatch.setenv("RANDOM_DIAGRAMS", "0")
    monkeypatch.setenv("RANDOM_PAIRS", "0")


def test_check_reports_exit_code(quick_check, capsys):
    code = run(["check", "--max-crossings", "4", "--seed", "1"])
    out = capsys.readouterr().out
    assert code in (EXIT_OK, EXIT_CHECK)
    assert "seed 1, max crossings 4" in out
    assert "clasp: 3 passed, 0 failed" in out
    assert out.strip().splitlines()[-1] == ("OK" if code == EXIT_OK else "FAILED")


def test_run_config_applies_flags_over_settings():
    settings = StringLinkSettings(output_format="text", seed=7, max_crossings=5)
    config = RunConfig.from_settings(settings, subcommand="check", output_format="json")
    assert (config.output_format, config.seed, config.max_crossings) == ("json", 7, 5)
    limited = config.with_limits(seed=0)
    assert (limited.seed, limited.max_crossings) == (0, 5)
    assert config.with_input("-").from_stdin
    assert not config.with_input(fixture_path("clasp1")).from_stdin
