"""CLI: flag parsing, output schemas, exit codes, determinism."""
import json
import subprocess
import sys

import pytest

import degsums.bounds
import degsums.sums
from degsums.cli import main
from degsums.sums import SumResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sum_table(capsys):
    code, out, err = run_cli(capsys, "sum", "--family", "gsp", "--n", "1",
                             "--q", "3", "--kind", "real_valued")
    assert code == 0
    assert "value   14" in out
    assert "q^2 + q + 2" in out


def test_sum_json_snapshot(capsys):
    code, out, _ = run_cli(capsys, "sum", "--family", "sp", "--n", "1",
                           "--q", "5", "--kind", "fs_plus", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "family": "sp", "n": 1, "q": 5, "kind": "fs_plus",
        "value": "16", "poly": None,
        "source_citation": "half of (all-degree sum + signed sum); requires q = 1 (mod 4)",
    }


def test_sum_domain_error_exit_2(capsys):
    code, out, err = run_cli(capsys, "sum", "--family", "sp", "--n", "1",
                             "--q", "3", "--kind", "fs_plus")
    assert code == 2
    assert out == ""
    assert "mod 4" in err


def test_sum_no_formula_exit_2(capsys):
    code, _, err = run_cli(capsys, "sum", "--family", "so_plus", "--n", "1",
                           "--q", "3", "--kind", "all")
    assert code == 2
    assert "no formula in scope" in err


def test_unknown_family_exit_2(capsys):
    code, _, err = run_cli(capsys, "poly", "--family", "so8", "--n", "1", "--kind", "all")
    assert code == 2
    assert "unknown family" in err


def test_poly_table(capsys):
    code, out, _ = run_cli(capsys, "poly", "--family", "o_odd", "--n", "2", "--kind", "all")
    assert code == 0
    assert "2*q^6 + 4*q^4 + 2" in out


def test_census_json_schema(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "gl", "--n", "1",
                           "--p", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "family": "gl", "n": 1, "p": 3, "order": "2",
        "involutions": {
            "total": "2",
            "buckets": [
                {"mu": 1, "j": 0, "count": "1"},
                {"mu": 1, "j": 1, "count": "1"},
            ],
        },
        "twisted": {"+1": "2", "-1": "0"},
    }


def test_census_twist_selection(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "gsp", "--n", "1",
                           "--p", "3", "--twists", "-1")
    assert code == 0
    assert "twisted(-1)  18" in out
    assert "twisted(+1)" not in out


def test_census_envelope_exit_2(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "sp", "--n", "3", "--p", "3")
    assert code == 2
    assert "envelope" in err and "estimated order" in err
    code, _, err = run_cli(capsys, "census", "--family", "u", "--n", "2", "--p", "3")
    assert code == 2
    code, _, err = run_cli(capsys, "census", "--family", "gl", "--n", "2", "--p", "2")
    assert code == 2


def test_census_bad_twist_exit_2(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "gl", "--n", "1",
                           "--p", "3", "--twists", "2")
    assert code == 2
    assert "twist constant" in err


def test_census_jobs_byte_identical(capsys):
    runs = []
    for jobs in ("1", "2", "3"):
        code, out, _ = run_cli(capsys, "census", "--family", "sp", "--n", "1",
                               "--p", "5", "--jobs", jobs, "--format", "json")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1] == runs[2]


def test_verify_pass_exit_0(capsys):
    code, out, _ = run_cli(capsys, "verify", "--family", "so_odd", "--n", "1", "--p", "7")
    assert code == 0
    assert "result: pass" in out
    assert "[ok ]" in out and "FAIL" not in out


def test_verify_corrupted_formula_exit_1(capsys, monkeypatch):
    real = degsums.sums.degree_sum

    def corrupted(spec, kind):
        result = real(spec, kind)
        return SumResult(result.spec, result.kind, result.value + 1,
                         result.poly, result.source_citation)

    monkeypatch.setattr(degsums.sums, "degree_sum", corrupted)
    code, out, _ = run_cli(capsys, "verify", "--family", "gl", "--n", "1", "--p", "3")
    assert code == 1
    assert "result: fail" in out and "[FAIL]" in out


def test_bounds_csv_snapshot(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "gl", "--n", "1",
                           "--q", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("family,n,q,d,r,weyl,sum,sum_kind,lower")
    assert lines[1] == "gl,1,2,1,1,1,1,exact,1,3,3,9,1,pass,pass,pass,pass"


def test_bounds_ranges_and_json(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--family", "so_odd,gl", "--n", "1..2",
                           "--q", "3,5", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 8
    assert [r["family"] for r in rows] == ["so_odd"] * 4 + ["gl"] * 4
    assert all(r["pass_refined"] == "pass" for r in rows)


def test_bounds_inapplicable_exit_2(capsys):
    code, _, err = run_cli(capsys, "bounds", "--family", "sp", "--n", "1", "--q", "3")
    assert code == 2
    assert "inapplicable: center not connected" in err


def test_bounds_bad_range_exit_2(capsys):
    code, _, err = run_cli(capsys, "bounds", "--family", "gl", "--n", "3..1", "--q", "3")
    assert code == 2
    assert "range" in err
    code, _, err = run_cli(capsys, "bounds", "--family", "gl", "--n", "x", "--q", "3")
    assert code == 2


def test_bounds_corrupted_sum_exit_1(capsys, monkeypatch):
    real = degsums.bounds.degree_sum

    def corrupted(spec, kind):
        result = real(spec, kind)
        return SumResult(result.spec, result.kind, 0, result.poly,
                         result.source_citation)

    monkeypatch.setattr(degsums.bounds, "degree_sum", corrupted)
    code, out, _ = run_cli(capsys, "bounds", "--family", "gl", "--n", "2", "--q", "3")
    assert code == 1
    assert "fail" in out


def test_scan_pass_exit_0(capsys):
    code, out, _ = run_cli(capsys, "scan", "--lemma", "even_dim", "--m-max", "1", "--q-max", "2")
    assert code == 0
    assert "violations  0" in out


def test_scan_violation_exit_1(capsys, monkeypatch):
    monkeypatch.setitem(degsums.bounds._SCANNERS, "odd_dim",
                        lambda m, q_max: (1, [(m, 2)]))
    code, out, _ = run_cli(capsys, "scan", "--lemma", "odd_dim", "--m-max", "3", "--q-max", "4")
    assert code == 1
    assert "violations  3" in out


def test_scan_json_deterministic(capsys):
    outs = set()
    for _ in range(2):
        code, out, _ = run_cli(capsys, "scan", "--lemma", "binomineq", "--m-max", "6",
                               "--q-max", "6", "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_argparse_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--lemma", "nope", "--m-max", "3", "--q-max", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sum", "--family", "gl"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "degsums.cli", "sum", "--family", "gl",
         "--n", "2", "--q", "3", "--kind", "real_valued", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "14"
