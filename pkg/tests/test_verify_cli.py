"""Verification reports and the command-line surface."""

import json

import pytest

from thetasw.cli import decomposition_payload, main, parse_decomposition
from thetasw.theta import decompose
from thetasw.verify import CheckResult, UsageError, VerificationReport, run_suite


def test_genus3_suite_passes():
    report = run_suite("genus3")
    assert report.passed
    assert len({c.id for c in report.checks}) == len(report.checks)
    assert all(c.ms >= 0 for c in report.checks)


def test_remaining_suites_pass_at_defaults():
    for suite in ("counts", "sigmastate", "independence", "polyrec"):
        report = run_suite(suite)
        failed = [c.id for c in report.checks if not c.passed]
        assert not failed, f"{suite}: {failed}"


def test_suite_parameter_validation():
    with pytest.raises(UsageError):
        run_suite("nope")
    with pytest.raises(UsageError):
        run_suite("counts", g_range=(1, 3))
    with pytest.raises(UsageError):
        run_suite("counts", g_range=(5, 3))
    with pytest.raises(UsageError):
        run_suite("polyrec", n_range=(0, 9))
    with pytest.raises(UsageError):
        run_suite("independence", g_range=(2, 4))


def test_report_json_roundtrip():
    report = run_suite("genus3")
    data = json.loads(json.dumps(report.to_json_dict()))
    assert VerificationReport.from_json_dict(data) == report


def test_crashing_check_reports_as_failure():
    from thetasw.verify import Check, _run_checks

    def boom():
        raise RuntimeError("exploded")

    report = _run_checks("demo", [Check("boom", "a check that raises", boom)])
    assert not report.passed
    assert "RuntimeError" in report.checks[0].detail


def test_report_rendering_marks_failures():
    report = VerificationReport(
        "demo",
        (
            CheckResult("ok-check", "something true", True, "", 1.0),
            CheckResult("bad-check", "something false", False, "left != right", 2.0),
        ),
    )
    assert not report.passed
    text = report.render_text()
    assert "[PASS] ok-check" in text and "[FAIL] bad-check" in text and "left != right" in text
    with pytest.raises(ValueError):
        VerificationReport("demo", (CheckResult("x", "", True, "", 0.0),) * 2)


def test_decomposition_payload_roundtrip():
    for g, parity in ((2, "all"), (3, "odd"), (4, "even")):
        algebra = decompose(g, parity)
        payload = decomposition_payload(g, parity, algebra)
        parsed = parse_decomposition(json.loads(json.dumps(payload)))
        assert parsed == (g, parity, algebra)


def test_cli_decompose_text_stable(capsys):
    assert main(["decompose", "--g", "3", "--parity", "odd"]) == 0
    first = capsys.readouterr().out
    assert main(["decompose", "--g", "3", "--parity", "odd"]) == 0
    assert capsys.readouterr().out == first
    assert "total degree 28" in first


def test_cli_decompose_json(capsys):
    assert main(["decompose", "--g", "2", "--parity", "all", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degree"] == 16
    assert payload["g"] == 2
    g, parity, algebra = parse_decomposition(payload)
    assert algebra.degree == 16


def test_cli_decompose_genus4_even(capsys):
    assert main(["decompose", "--g", "4", "--parity", "even", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    by_size = {}
    for f in payload["factors"]:
        by_size.setdefault(len(f["A"]), set()).add(f["multiplicity"])
    assert by_size == {0: {8}, 1: {4}, 2: {2}, 3: {1}, 4: {1}}


def test_cli_alpha(capsys):
    assert main(["alpha", "--g", "3", "--parity", "odd", "--degree", "2"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "a1 a2 + a1 a3 + a2 a3 + e a1 + e a2 + e a3"

    assert main(["alpha", "--g", "3", "--parity", "odd", "--degree", "1"]) == 0
    assert capsys.readouterr().out.strip() == "0"

    assert main(["alpha", "--g", "3", "--parity", "all", "--degree", "4"]) == 0
    assert capsys.readouterr().out.strip() == "e a1 a2 a3"


def test_cli_alpha_json(capsys):
    assert main(["alpha", "--g", "3", "--parity", "all", "--degree", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["terms"] == [[1, 0, [1, 2, 3]]]
    assert payload["text"] == "e a1 a2 a3"


def test_cli_verify_passes(capsys):
    assert main(["verify", "genus3"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out and "[FAIL]" not in out

    assert main(["verify", "counts", "--g", "3..4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "pass"
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_cli_usage_errors(capsys):
    assert main(["decompose", "--g", "9", "--parity", "odd"]) == 2
    assert main(["alpha", "--g", "3", "--parity", "odd", "--degree", "99"]) == 2
    assert main(["verify", "counts", "--g", "1..9"]) == 2
    assert main(["verify", "counts", "--g", "x..y"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "made-up-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--g", "3", "--parity", "sideways"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cli_verify_failure_exit_code(monkeypatch, capsys):
    import thetasw.cli as cli

    failing = VerificationReport(
        "genus3", (CheckResult("broken", "a claim", False, "computed != expected", 0.1),)
    )
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: failing)
    assert main(["verify", "genus3"]) == 1
    assert "[FAIL] broken" in capsys.readouterr().out
