"""Command-line interface: exit codes, JSON schema, determinism."""

import json

import pytest

from piqcheck import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_has_31_lines(capsys):
    code, out, err = run(capsys, "list")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 31
    assert lines[0].startswith("EQ1-1\t")


def test_verify_id_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--id", "EQ1-1", "--order", "120", "--json")
    assert code == 0
    payload = json.loads(out.strip())
    assert set(payload) >= {
        "id", "status", "order", "valid_order", "first_failure",
        "paper_form_match", "elapsed_ms",
    }
    assert payload["id"] == "EQ1-1"
    assert payload["status"] == "verified"
    assert payload["first_failure"] is None


def test_verify_unknown_id_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "--id", "EQ0-0", "--order", "64")
    assert code == cli.EXIT_USAGE
    assert "unknown identity" in err


def test_verify_user_identity_falsified_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--expr", "Pi(q) = Pi(q^2)", "--order", "64")
    assert code == cli.EXIT_FALSIFIED
    assert "falsified" in out


def test_verify_expr_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--expr", "Pi(q = Pi(q)", "--order", "64")
    assert code == cli.EXIT_USAGE
    assert "parse error" in err


def test_verify_expr_file(tmp_path, capsys):
    path = tmp_path / "identities.txt"
    path.write_text(
        "# catalog spot checks\n"
        "Pi(q)^2 = Pi(q) * Pi(q)\n"
        "\n"
        "psi(q)^4 = phi(q)^2 * psi(q^2)^2\n"
    )
    code, out, _ = run(capsys, "verify", "--expr-file", str(path), "--order", "64", "--json")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [p["id"] for p in lines] == ["line-2", "line-4"]
    assert all(p["status"] == "verified" for p in lines)


def test_verify_requires_exactly_one_source(capsys):
    code, _, err = run(capsys, "verify", "--order", "64")
    assert code == cli.EXIT_USAGE
    code, _, err = run(capsys, "verify", "--id", "EQ1-1", "--expr", "1 = 1")
    assert code == cli.EXIT_USAGE


def test_verify_all_text_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify-all", "--order", "64")
    code2, out2, _ = run(capsys, "verify-all", "--order", "64")
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 31


def test_expand_pi_q(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "Pi(q)", "--order", "24")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t^1: 1"
    assert lines[1] == "t^5: 2"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "q^2 + 3", "--order", "16", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["valuation"] == 0
    assert {"exponent": 8, "value": "1"} in payload["coefficients"]


def test_prove_modular_single_equation(capsys):
    code, out, _ = run(capsys, "prove-modular", "--theorem", "3.2", "--eq", "2-5")
    assert code == 0
    assert out.strip() == "2-5 proved paper_form=match"


def test_prove_modular_all_degrees(capsys):
    code, out, _ = run(capsys, "prove-modular")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 14
    assert all("proved" in line for line in lines)


def test_prove_modular_json_records_mismatch_forms(capsys):
    code, out, _ = run(capsys, "prove-modular", "--degree", "5", "--json")
    assert code == 0
    payloads = [json.loads(line) for line in out.strip().splitlines()]
    by_id = {p["id"]: p for p in payloads}
    assert by_id["2-1"]["status"] == "proved"
    assert by_id["2-1"]["paper_form_match"] is False
    assert by_id["2-1"]["computed_form"]
    assert by_id["2-5"]["paper_form_match"] is True


def test_prove_modular_wrong_degree_eq_combo(capsys):
    code, _, err = run(capsys, "prove-modular", "--degree", "3", "--eq", "2-5")
    assert code == cli.EXIT_USAGE


def test_check_param_both_degrees(capsys):
    code, out, _ = run(capsys, "check-param", "--degree", "3", "--order", "64")
    assert code == 0
    assert "verified" in out
    code, out, _ = run(capsys, "check-param", "--degree", "5", "--order", "64", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "verified"
    assert len(payload["checks"]) == 2


def test_order_environment_override(capsys, monkeypatch):
    monkeypatch.setenv(cli.ENV_ORDER, "64")
    code, out, _ = run(capsys, "verify", "--id", "EQ1-1", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 64
    # an explicit flag wins over the environment
    code, out, _ = run(capsys, "verify", "--id", "EQ1-1", "--order", "96", "--json")
    assert json.loads(out)["order"] == 96


def test_order_below_minimum_rejected(capsys):
    code, _, err = run(capsys, "verify", "--id", "EQ1-1", "--order", "4")
    assert code == cli.EXIT_USAGE


def test_quiet_suppresses_reports_keeps_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--expr", "Pi(q) = Pi(q^2)", "--order", "64", "--quiet")
    assert code == cli.EXIT_FALSIFIED
    assert out == ""


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli._build_parser().parse_args(["no-such-command"])
    assert exc.value.code == 2
    assert cli.main(["no-such-command"]) == cli.EXIT_USAGE
    capsys.readouterr()
