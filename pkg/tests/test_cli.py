"""CLI behavior: output formats, determinism, exit codes."""

import json

from degenpoly import cli
from degenpoly.bipoly import BiPoly
from degenpoly.identities import Case, IdentityId, VerificationReport


def run_capture(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- compute ----------------------------------------------------------------------


def test_compute_triangle_csv(capsys):
    code, out, _ = run_capture(
        capsys,
        ["compute", "--family", "deg-stirling2", "--max-n", "6",
         "--lambda", "symbolic", "--format", "csv"],
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k=0,k=1,k=2,k=3,k=4,k=5,k=6"
    # S2_l(2,1) = 1 - l sits in row n=2, column k=1.
    assert lines[3].split(",")[2] == "1 - l"


def test_compute_sequence_json(capsys):
    code, out, _ = run_capture(
        capsys,
        ["compute", "--family", "deg-exp", "--max-n", "3", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "deg-exp"
    assert payload["kind"] == "sequence"
    # value at n=2 is x^2 - l*x
    assert payload["values"][2]["value"] == [
        {"dl": 0, "dx": 2, "c": "1"},
        {"dl": 1, "dx": 1, "c": "-1"},
    ]


def test_compute_polynomial_family(capsys):
    code, out, _ = run_capture(
        capsys,
        ["compute", "--family", "central-factorial-power", "--max-n", "3",
         "--format", "csv"],
    )
    assert code == 0
    assert "-1/4*x + x^3" in out


def test_compute_numeric_lambda_and_x(capsys):
    code, out, _ = run_capture(
        capsys,
        ["compute", "--family", "deg-bernoulli2", "--max-n", "2",
         "--lambda", "1/3", "--x", "0", "--format", "csv"],
    )
    assert code == 0
    # b^(1)_1(0) at l = 1/3 is (1 - 1/3)/2 = 1/3.
    assert out.splitlines()[2] == "1,1/3"


def test_compute_is_byte_deterministic(capsys):
    argv = ["compute", "--family", "deg-stirling1", "--max-n", "5", "--format", "json"]
    _, first, _ = run_capture(capsys, argv)
    _, second, _ = run_capture(capsys, argv)
    assert first == second


def test_compute_output_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run_capture(
        capsys,
        ["compute", "--family", "stirling2", "--max-n", "4", "-o", str(target)],
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["family"] == "stirling2"


# -- verify -----------------------------------------------------------------------


def test_verify_single_identity_json(capsys):
    code, out, _ = run_capture(
        capsys,
        ["verify", "--identity", "thm3", "--max-n", "5", "--order", "2",
         "--trunc", "8"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["identity"] == "thm3"
    assert all(case["status"] == "pass" for case in payload["cases"])


def test_verify_minimal_range(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "--identity", "thm1", "--max-n", "0", "--trunc", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["cases"]) == 1
    assert payload["cases"][0]["indices"] == {"n": 0}


def test_verify_all_quick(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "--identity", "all", "--profile", "quick"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert len(payload["reports"]) == 15


def test_verify_csv_format(capsys):
    code, out, _ = run_capture(
        capsys,
        ["verify", "--identity", "eq23", "--max-n", "2", "--trunc", "4",
         "--format", "csv"],
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "identity,indices,status,residual"
    assert lines[1] == "eq23,n=0,pass,0"


def test_verify_is_byte_deterministic(capsys):
    argv = ["verify", "--identity", "eq5-reconstruction", "--max-n", "5", "--trunc", "6"]
    _, first, _ = run_capture(capsys, argv)
    _, second, _ = run_capture(capsys, argv)
    assert first == second
    assert "wall_time_ms" not in first


def test_verify_timings_flag(capsys):
    code, out, _ = run_capture(
        capsys,
        ["verify", "--identity", "eq23", "--max-n", "2", "--trunc", "4", "--timings"],
    )
    assert code == 0
    assert "wall_time_ms" in json.loads(out)


def test_verify_failure_exit_code(capsys, monkeypatch):
    failing = VerificationReport(
        identity=IdentityId.EQ23,
        max_n=0,
        max_order=None,
        trunc=4,
        profile=None,
        cases=(Case({"n": 0}, BiPoly.lam()),),
        wall_time_ms=0.0,
    )
    monkeypatch.setattr(cli, "verify", lambda *a, **k: failing)
    code, out, _ = run_capture(
        capsys, ["verify", "--identity", "eq23", "--max-n", "0", "--trunc", "4"]
    )
    assert code == 1
    assert json.loads(out)["cases"][0]["status"] == "fail"


# -- usage errors --------------------------------------------------------------------


def test_trunc_below_max_n_is_usage_error(capsys):
    code, _, err = run_capture(
        capsys,
        ["verify", "--identity", "eq23", "--max-n", "8", "--trunc", "4"],
    )
    assert code == 2


def test_unknown_family_is_usage_error(capsys):
    code, _, _ = run_capture(
        capsys, ["compute", "--family", "no-such-family", "--max-n", "2"]
    )
    assert code == 2


def test_unknown_identity_is_usage_error(capsys):
    code, _, err = run_capture(capsys, ["verify", "--identity", "thm9"])
    assert code == 2
    assert "unknown identity" in err


def test_bad_rational_is_usage_error(capsys):
    code, _, _ = run_capture(
        capsys,
        ["compute", "--family", "deg-exp", "--max-n", "2", "--lambda", "pi"],
    )
    assert code == 2


def test_unsupported_order_is_usage_error(capsys):
    code, _, err = run_capture(
        capsys,
        ["compute", "--family", "type2-deg-bernoulli2", "--max-n", "2",
         "--order", "1/2"],
    )
    assert code == 2
    assert "integer order" in err


def test_range_flags_rejected_with_all(capsys):
    code, _, _ = run_capture(
        capsys, ["verify", "--identity", "all", "--max-n", "4"]
    )
    assert code == 2


# -- list-families ----------------------------------------------------------------------


def test_list_families_output(capsys):
    code, out, _ = run_capture(capsys, ["list-families"])
    assert code == 0
    assert "deg-stirling2" in out
    assert "(1/k!) * (e_l(t) - 1)^k" in out
    _, second, _ = run_capture(capsys, ["list-families"])
    assert out == second
