import json
import math
import subprocess
import sys

import numpy as np
import pytest

from symxform import cli, serialize
from symxform.discrete import enumerate_ordered
from symxform.fourier_series import TorusGrid, synthesize_on_points, CoefficientMap


def run_cli(*argv):
    return cli.run(list(argv))


class TestEval:
    def test_worked_example_json(self, capsys):
        code = run_cli("eval", "--anti", "--lambda", "0.5,-0.5", "--x", "0.25,0", "--json")
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["re"] == pytest.approx(0.0, abs=1e-12)
        assert payload["im"] == pytest.approx(math.sqrt(2), abs=1e-10)

    def test_text_output(self, capsys):
        assert run_cli("eval", "--sym", "--lambda", "1,0", "--x", "0.1,0.2") == 0
        out = capsys.readouterr().out.split()
        assert len(out) == 2
        float(out[0]), float(out[1])

    def test_naive_flag_matches_fast(self, capsys):
        run_cli("eval", "--anti", "--lambda", "2,1,0", "--x", "0.1,0.5,0.9", "--json")
        fast = json.loads(capsys.readouterr().out)
        run_cli("eval", "--anti", "--naive", "--lambda", "2,1,0", "--x", "0.1,0.5,0.9", "--json")
        naive = json.loads(capsys.readouterr().out)
        assert fast["re"] == pytest.approx(naive["re"], abs=1e-10)
        assert fast["im"] == pytest.approx(naive["im"], abs=1e-10)

    def test_dimension_mismatch_is_usage_error(self, capsys):
        assert run_cli("eval", "--anti", "--lambda", "1,2", "--x", "0.5") == 2

    def test_unknown_flag_is_usage_error(self, capsys):
        assert run_cli("eval", "--anti", "--lambda", "1", "--x", "0.5", "--bogus") == 2


class TestFileFlows:
    def test_dft_forward_inverse_round_trip(self, tmp_path, capsys):
        rng = np.random.default_rng(0)
        grid, _ = enumerate_ordered(4, 2, "strict")
        values = rng.normal(size=len(grid)) + 1j * rng.normal(size=len(grid))
        samples = tmp_path / "samples.csv"
        coeffs = tmp_path / "coeffs.json"
        back = tmp_path / "back.csv"
        serialize.dump_samples(np.asarray(grid.numerators), values, samples,
                               integer_coords=True)
        assert run_cli("dft", "--anti", "--forward", "--N", "4", "--n", "2",
                       "--in", str(samples), "--out", str(coeffs)) == 0
        assert run_cli("dft", "--anti", "--inverse", "--N", "4", "--n", "2",
                       "--in", str(coeffs), "--out", str(back)) == 0
        c1, v1 = serialize.load_samples(samples)
        c2, v2 = serialize.load_samples(back)
        np.testing.assert_array_equal(c1, c2)
        assert np.max(np.abs(v1 - v2)) < 1e-10

    def test_dft_sym_round_trip(self, tmp_path, capsys):
        rng = np.random.default_rng(1)
        grid, _ = enumerate_ordered(3, 2, "weak")
        values = rng.normal(size=len(grid)) + 1j * rng.normal(size=len(grid))
        samples = tmp_path / "samples.csv"
        coeffs = tmp_path / "coeffs.json"
        back = tmp_path / "back.csv"
        serialize.dump_samples(np.asarray(grid.numerators), values, samples,
                               integer_coords=True)
        assert run_cli("dft", "--sym", "--forward", "--N", "3", "--n", "2",
                       "--in", str(samples), "--out", str(coeffs)) == 0
        assert run_cli("dft", "--sym", "--inverse", "--N", "3", "--n", "2",
                       "--in", str(coeffs), "--out", str(back)) == 0
        _, v2 = serialize.load_samples(back)
        assert np.max(np.abs(values - v2)) < 1e-10

    def test_analyze_then_synthesize(self, tmp_path, capsys):
        grid = TorusGrid(8, 2)
        cm = CoefficientMap("anti", {(2, 0): 2.0, (3, 1): 1j})
        pts = grid.points()
        vals = synthesize_on_points(cm, pts)
        samples = tmp_path / "torus.csv"
        out = tmp_path / "coeffs.json"
        serialize.dump_samples(pts, vals, samples)
        assert run_cli("analyze", "--anti", "--M", "8", "--n", "2",
                       "--in", str(samples), "--out", str(out)) == 0
        recovered = serialize.load_coefficients(out, "anti")
        assert recovered[(2, 0)] == pytest.approx(2.0, abs=1e-10)
        assert recovered[(3, 1)] == pytest.approx(1j, abs=1e-10)
        # evaluate the coefficient file at one point
        assert run_cli("synthesize", "--anti", "--in", str(out),
                       "--x", "0.3,0.7", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        want = synthesize_on_points(cm, np.array([[0.3, 0.7]]))[0]
        assert payload["re"] == pytest.approx(want.real, abs=1e-10)
        assert payload["im"] == pytest.approx(want.imag, abs=1e-10)

    def test_synthesize_grid_output(self, tmp_path, capsys):
        coeffs = tmp_path / "c.json"
        out = tmp_path / "grid.csv"
        serialize.dump_coefficients(CoefficientMap("sym", {(1, 0): 1.0}), coeffs)
        assert run_cli("synthesize", "--sym", "--in", str(coeffs), "--M", "4",
                       "--n", "2", "--out", str(out)) == 0
        pts, vals = serialize.load_samples(out)
        assert pts.shape == (16, 2) and vals.shape == (16,)

    def test_missing_file_is_usage_error(self, tmp_path, capsys):
        assert run_cli("dft", "--anti", "--forward", "--N", "4", "--n", "2",
                       "--in", str(tmp_path / "nope.csv"),
                       "--out", str(tmp_path / "o.json")) == 2

    def test_analyze_sample_count_checked(self, tmp_path, capsys):
        samples = tmp_path / "short.csv"
        serialize.dump_samples(np.zeros((4, 2)), np.zeros(4, complex), samples)
        assert run_cli("analyze", "--anti", "--M", "8", "--n", "2",
                       "--in", str(samples), "--out", str(tmp_path / "o.json")) == 2


class TestVerify:
    def test_orthogonality_default_has_36_entries(self, capsys):
        assert run_cli("verify", "--suite", "orthogonality", "--N", "4", "--n", "2") == 0
        out = capsys.readouterr().out
        assert "36/36 checks passed" in out

    def test_orthogonality_json_schema(self, capsys):
        assert run_cli("verify", "--suite", "orthogonality", "--N", "4", "--n", "2",
                       "--sym", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["failed"] == 0
        check = payload["checks"][0]
        assert set(check) >= {"name", "expected", "observed", "tolerance", "passed"}

    def test_orthogonality_with_continuous(self, capsys):
        assert run_cli("verify", "--suite", "orthogonality", "--N", "4", "--n", "2",
                       "--M", "8", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        names = [c["name"] for c in payload["checks"]]
        assert any(name.startswith("torus[anti") for name in names)
        assert any(name.startswith("torus[mixed") for name in names)

    @pytest.mark.parametrize("suite", ["roundtrip", "laplace", "hermite", "special-cases"])
    def test_suites_pass(self, suite, capsys):
        assert run_cli("verify", "--suite", suite, "--seed", "1") == 0

    def test_seeded_runs_are_deterministic(self, capsys):
        run_cli("verify", "--suite", "roundtrip", "--seed", "7", "--json")
        first = capsys.readouterr().out
        run_cli("verify", "--suite", "roundtrip", "--seed", "7", "--json")
        second = capsys.readouterr().out
        assert first == second

    def test_thread_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMXFORM_THREADS", "4")
        assert run_cli("verify", "--suite", "roundtrip", "--seed", "3") == 0
        monkeypatch.setenv("SYMXFORM_THREADS", "not-a-number")
        assert run_cli("verify", "--suite", "roundtrip", "--seed", "3") == 0


class TestBench:
    def test_schema_and_sizes(self, capsys):
        assert run_cli("bench", "--reps", "1", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        rows = payload["benchmarks"]
        assert [(r["op"], r["n"]) for r in rows] == [
            ("eval_antisym", 6), ("eval_antisym", 8),
            ("eval_sym", 6), ("eval_sym", 8), ("eval_sym", 10),
        ]
        for r in rows:
            assert set(r) == {"op", "n", "naive_seconds", "fast_seconds", "speedup"}
            assert r["naive_seconds"] > 0 and r["fast_seconds"] > 0


class TestEntrypoint:
    def test_fresh_interpreter_run(self):
        proc = subprocess.run(
            [sys.executable, "-c",
             "from symxform.cli import run; "
             "raise SystemExit(run(['verify', '--suite', 'roundtrip']))"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "checks passed" in proc.stdout
