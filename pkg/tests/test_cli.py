"""Command-line smoke tests."""

import json
from pathlib import Path
from unittest.mock import patch

from click.testing import CliRunner

FIXTURES = Path(__file__).parent / "fixtures"


def _invoke(*args, env=None):
    from qjord.cli import app

    with patch("qjord.cli.prepare_directories"):
        return CliRunner().invoke(app, list(args), env=env)


def test_cli_help():
    result = _invoke("--help")
    assert result.exit_code == 0
    assert "Jordanian" in result.output


def test_cli_catalog():
    result = _invoke("catalog")
    assert result.exit_code == 0
    assert "Catalog" in result.output
    assert "talpha" in result.output


def test_cli_dump_builtin():
    result = _invoke("dump-builtin", "uq_sl2")
    assert result.exit_code == 0
    assert result.output.startswith("presentation uq_sl2;")


def test_cli_unknown_suite_exits_2():
    result = _invoke("verify", "nonexistent")
    assert result.exit_code == 2
    assert "UnknownPresentation" in result.output


def test_cli_rejects_non_rational_h():
    result = _invoke("contract", "sl2", "--h", "abc")
    assert result.exit_code == 2


def test_cli_contract_writes_json(tmp_path):
    out = tmp_path / "r.json"
    result = _invoke("contract", "sl2", "--reps", "1/2", "--out", str(out))

    assert result.exit_code == 0
    expected = json.loads((FIXTURES / "sl2_half_half.json").read_text(encoding="utf-8"))
    assert json.loads(out.read_text(encoding="utf-8")) == expected


def test_cli_export_default_path(tmp_path):
    with patch("qjord.cli.OUTPUT_DIR", tmp_path):
        result = _invoke("export", "sl2", "--route", "closed_form")

    assert result.exit_code == 0
    written = tmp_path / "sl2_spin-1-2_spin-1-2_closed_form.json"
    assert json.loads(written.read_text(encoding="utf-8"))["route"] == "closed_form"


def test_cli_show_r_keeps_q_before_limit():
    result = _invoke("show-r", "sl2", "--route", "rq")
    assert result.exit_code == 0
    assert "s^" in result.output


def test_cli_verify_uses_ledger_from_environment(tmp_path):
    from qjord.settings import LEDGER_PATH

    out = tmp_path / "report.json"
    empty = {"QJORD_LEDGER": str(tmp_path / "absent.yml")}
    shipped = {"QJORD_LEDGER": str(LEDGER_PATH)}

    failing = _invoke("verify", "talpha", "--format", "json", "--out", str(out), env=empty)
    assert failing.exit_code == 1
    assert json.loads(out.read_text(encoding="utf-8"))["counts"]["fails"] > 0

    passing = _invoke("verify", "talpha", "--format", "json", "--out", str(out), env=shipped)
    assert passing.exit_code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["counts"]["fails"] == 0
