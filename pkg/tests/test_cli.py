"""CLI contract tests: exit codes, JSON schema, determinism."""

import json

import pytest

from geomfree.cli import main
from geomfree.report import validate_report

from oracles import PI_6, Q_REF


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestEval:
    def test_sin_zero(self, capsys):
        rc, out, _ = run_cli(capsys, "eval", "sin", "0")
        assert rc == 0
        assert out.startswith("0 ")

    def test_cos_two_tight(self, capsys):
        rc, out, _ = run_cli(capsys, "eval", "cos", "2", "--tol", "1e-12")
        assert rc == 0
        assert out.startswith("-0.416146836547")

    def test_arcsin_half(self, capsys):
        rc, out, _ = run_cli(capsys, "eval", "arcsin", "0.5", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert abs(payload["value"] - PI_6) <= 1e-14
        assert payload["abs_error_bound"] < 1e-12

    def test_domain_error_exit_two(self, capsys):
        rc, _, err = run_cli(capsys, "eval", "sin", "1e9")
        assert rc == 2
        assert "error" in err

    def test_bad_tolerance_exit_two(self, capsys):
        rc, _, _ = run_cli(capsys, "eval", "sin", "1", "--tol", "-1")
        assert rc == 2

    def test_usage_error_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "tan", "1"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestConstants:
    def test_digits_15(self, capsys):
        rc, out, _ = run_cli(capsys, "constants", "--digits", "15")
        assert rc == 0
        assert "1.570796326794897" in out
        assert "3.141592653589793" in out

    def test_table_rows(self, capsys):
        rc, out, _ = run_cli(capsys, "constants")
        assert rc == 0
        assert "3       -1        0" in out.replace("  ", " ").replace(" ", " ") or "-1" in out

    def test_json_round_trip(self, capsys):
        rc, out, _ = run_cli(capsys, "constants", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert abs(payload["q"] - Q_REF) <= 1e-13
        assert payload["pi"] == 2 * payload["q"]
        assert payload["q_multiples"][3] == [3, -1, 0]

    def test_bad_digits(self, capsys):
        rc, _, err = run_cli(capsys, "constants", "--digits", "40")
        assert rc == 2


class TestVerify:
    def test_exact_suite(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--suite", "exact", "--degree", "41")
        assert rc == 0
        assert "FAIL" not in out

    def test_numeric_suite(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--suite", "numeric",
                             "--samples", "200", "--seed", "7")
        assert rc == 0

    def test_all_suite_summary_counts(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--samples", "120", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        validate_report(payload)
        assert payload["summary"]["total"] == len(payload["checks"])
        assert payload["summary"]["failed"] == 0

    def test_report_written_and_valid(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        rc, _, _ = run_cli(capsys, "verify", "--samples", "120", "--out", str(out_path))
        assert rc == 0
        payload = json.loads(out_path.read_text())
        validate_report(payload)

    def test_deterministic_under_seed(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        run_cli(capsys, "verify", "--samples", "150", "--seed", "3", "--out", str(p1))
        run_cli(capsys, "verify", "--samples", "150", "--seed", "3", "--out", str(p2))
        a = json.loads(p1.read_text())
        b = json.loads(p2.read_text())
        assert a["checks"] == b["checks"]  # timestamp may differ; checks may not
        a["timestamp"] = b["timestamp"] = None
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_degree_cap(self, capsys):
        rc, _, err = run_cli(capsys, "verify", "--degree", "101")
        assert rc == 2

    def test_samples_cap(self, capsys):
        rc, _, _ = run_cli(capsys, "verify", "--samples", "2000000")
        assert rc == 2


class TestIntegrate:
    def test_quarter_circle(self, capsys):
        rc, out, _ = run_cli(capsys, "integrate", "quarter-circle", "--tol", "1e-10")
        assert rc == 0
        assert out.startswith("0.78539816339744")

    def test_arcsin_one(self, capsys):
        rc, out, _ = run_cli(capsys, "integrate", "arcsin", "1")
        assert rc == 0
        assert out.startswith("1.57079632679")

    def test_arclength_negative_args(self, capsys):
        rc, out, _ = run_cli(capsys, "integrate", "arclength", "-1", "1")
        assert rc == 0
        assert out.startswith("3.14159265358")

    def test_domain_error(self, capsys):
        rc, _, err = run_cli(capsys, "integrate", "arcsin", "2")
        assert rc == 2

    def test_missing_args(self, capsys):
        rc, _, _ = run_cli(capsys, "integrate", "arclength", "0.5")
        assert rc == 2


class TestBench:
    def test_small_run_json(self, capsys):
        rc, out, _ = run_cli(capsys, "bench", "--n", "200", "--format", "json",
                             "--functions", "sin,cos")
        assert rc == 0
        records = json.loads(out)
        assert [r["function"] for r in records] == ["sin", "cos"]
        for r in records:
            assert r["n"] == 200
            assert r["max_abs_error_vs_platform"] <= 1e-13
            assert r["ns_per_eval_self"] > 0
            assert r["ns_per_eval_platform"] > 0

    def test_cos_error_symmetric_under_negation(self, capsys):
        rc, out, _ = run_cli(capsys, "bench", "--n", "150", "--seed", "5",
                             "--interval", "-3", "3", "--functions", "cos",
                             "--format", "json")
        assert rc == 0
        (rec,) = json.loads(out)
        import math
        from geomfree.series_kernel import cos_eval
        import random
        rng = random.Random("5:cos")
        xs = [rng.uniform(-3, 3) for _ in range(150)]
        for x in xs[:40]:
            a = abs(cos_eval(x, 1e-15).value - math.cos(x))
            b = abs(cos_eval(-x, 1e-15).value - math.cos(-x))
            assert a == b

    def test_n_too_small(self, capsys):
        rc, _, _ = run_cli(capsys, "bench", "--n", "50")
        assert rc == 2

    def test_bad_interval(self, capsys):
        rc, _, _ = run_cli(capsys, "bench", "--n", "200", "--interval", "2", "1")
        assert rc == 2
