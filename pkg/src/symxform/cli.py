"""Command-line interface: evaluate, transform files, verify, benchmark.

Exit codes: 0 on success (all checks passing), 1 when any verification check
fails, 2 on usage errors.  ``--json`` switches every command to
machine-readable output.  ``SYMXFORM_THREADS`` caps the worker threads used
to run independent verification checks (default: serial).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import diffops, discrete, expfun, fourier_series, hermite, serialize
from .errors import ShapeError
from .expfun import ExpFunction
from .symgroup import stabilizer_order

USAGE_ERROR = 2


@dataclass
class Report:
    """One verification check: pass iff |expected - observed| <= tolerance."""

    name: str
    expected: float
    observed: float
    tolerance: float
    mode: str = "abs"  # 'abs' or 'rel'

    def __post_init__(self):
        self.expected = float(self.expected)
        self.observed = float(self.observed)
        self.tolerance = float(self.tolerance)

    @property
    def passed(self) -> bool:
        err = abs(self.expected - self.observed)
        if self.mode == "rel":
            err /= max(abs(self.expected), 1e-300)
        return err <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: expected={self.expected!r} "
            f"observed={self.observed!r} tol={self.tolerance:g} ({self.mode})"
        )


def _thread_cap() -> int:
    raw = os.environ.get("SYMXFORM_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_checks(makers):
    """Run zero-argument check callables, honoring the thread cap."""
    cap = _thread_cap()
    if cap == 1 or len(makers) <= 1:
        groups = [fn() for fn in makers]
    else:
        with ThreadPoolExecutor(max_workers=min(cap, len(makers))) as pool:
            groups = list(pool.map(lambda fn: fn(), makers))
    reports = []
    for group in groups:
        reports.extend(group)
    return reports


def _parse_floats(text: str, name: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError:
        raise SystemExit(f"error: {name} must be comma-separated numbers, got {text!r}")


def _emit(payload, as_json: bool, out=None):
    if as_json:
        out = out or sys.stdout
        json.dump(payload, out, indent=1, default=str)
        out.write("\n")


# ---------------------------------------------------------------- commands


def _cmd_eval(args) -> int:
    lam = _parse_floats(args.lam, "--lambda")
    x = _parse_floats(args.x, "--x")
    symmetry = "anti" if args.anti else "sym"
    method = "naive_sum" if args.naive else "fast"
    try:
        if symmetry == "anti":
            value = expfun.eval_antisym(lam, x, method)
        else:
            value = expfun.eval_sym(lam, x, method)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        _emit({"re": value.real, "im": value.imag}, True)
    else:
        print(f"{value.real!r} {value.imag!r}")
    return 0


def _cmd_analyze(args) -> int:
    symmetry = "anti" if args.anti else "sym"
    coords, values = serialize.load_samples(args.infile)
    n = args.n or coords.shape[1]
    grid = fourier_series.TorusGrid(args.M, n)
    if values.size != grid.size:
        print(
            f"error: {values.size} samples but the M={args.M}, n={n} torus grid "
            f"has {grid.size} points",
            file=sys.stderr,
        )
        return USAGE_ERROR
    spectrum = fourier_series.integer_spectrum(n, args.max_entry, symmetry)
    coeffs = fourier_series.analyze(values, symmetry, spectrum, grid)
    serialize.dump_coefficients(coeffs, args.outfile)
    _emit({"coefficients": len(coeffs), "out": args.outfile}, args.json)
    return 0


def _cmd_synthesize(args) -> int:
    symmetry = "anti" if args.anti else "sym"
    coeffs = serialize.load_coefficients(args.infile, symmetry)
    if args.x is not None:
        x = _parse_floats(args.x, "--x")
        value = fourier_series.synthesize(coeffs, x)
        if args.json:
            _emit({"re": value.real, "im": value.imag}, True)
        else:
            print(f"{value.real!r} {value.imag!r}")
        return 0
    if args.n is None:
        print("error: synthesize needs --x or both --M and --n", file=sys.stderr)
        return USAGE_ERROR
    grid = fourier_series.TorusGrid(args.M, args.n)
    pts = grid.points()
    values = fourier_series.synthesize_on_points(coeffs, pts)
    serialize.dump_samples(pts, values, args.outfile)
    _emit({"samples": int(values.size), "out": args.outfile}, args.json)
    return 0


def _cmd_dft(args) -> int:
    symmetry = "anti" if args.anti else "sym"
    kind = "strict" if symmetry == "anti" else "weak"
    grid, spectrum = discrete.enumerate_ordered(args.N, args.n, kind)
    transform = discrete.amdft if symmetry == "anti" else discrete.smdft
    if args.inverse:
        coeffs = serialize.load_coefficients(args.infile, symmetry)
        values = transform(coeffs, args.N, args.n, "inverse")
        serialize.dump_samples(
            np.asarray(grid.numerators), values, args.outfile, integer_coords=True
        )
        _emit({"samples": int(values.size), "out": args.outfile}, args.json)
        return 0
    coords, values = serialize.load_samples(args.infile)
    order = [grid.index(tuple(int(round(c)) for c in row)) for row in coords]
    vec = np.empty(len(grid), dtype=complex)
    vec[order] = values
    coeffs = transform(vec, args.N, args.n, "forward")
    serialize.dump_coefficients(coeffs, args.outfile)
    _emit({"coefficients": len(coeffs), "out": args.outfile}, args.json)
    return 0


# ---------------------------------------------------------------- verify


def _suite_orthogonality(args):
    checks = []
    n_points, n = args.N, args.n

    def discrete_gram():
        reports = []
        gram = discrete.gram_matrix(n_points, n, "anti")
        _, spectrum = discrete.enumerate_ordered(n_points, n, "strict")
        for i, mi in enumerate(spectrum.tuples):
            for j, mj in enumerate(spectrum.tuples):
                reports.append(Report(
                    name=f"gram[anti,N={n_points},n={n}] {mi}x{mj}",
                    expected=1.0 if i == j else 0.0,
                    observed=abs(gram[i, j]) if i != j else gram[i, j].real,
                    tolerance=args.tol,
                ))
        return reports

    checks.append(discrete_gram)
    if args.sym:
        def discrete_gram_sym():
            reports = []
            gram = discrete.gram_matrix(n_points, n, "sym")
            _, spectrum = discrete.enumerate_ordered(n_points, n, "weak")
            for i, mi in enumerate(spectrum.tuples):
                for j, mj in enumerate(spectrum.tuples):
                    expected = float(stabilizer_order(mi)) if i == j else 0.0
                    reports.append(Report(
                        name=f"gram[sym,N={n_points},n={n}] {mi}x{mj}",
                        expected=expected,
                        observed=abs(gram[i, j]) if i != j else gram[i, j].real,
                        tolerance=args.tol,
                    ))
            return reports

        checks.append(discrete_gram_sym)
    if args.M:
        def continuous():
            reports = []
            grid = fourier_series.TorusGrid(args.M, n)
            max_entry = max(1, args.M // 2 - 1)
            anti_keys = fourier_series.integer_spectrum(n, min(max_entry, 3), "anti")
            sym_keys = fourier_series.integer_spectrum(n, min(max_entry, 3), "sym")
            for i, mi in enumerate(anti_keys):
                for mj in anti_keys[i:]:
                    val = fourier_series.inner_product_fundamental(
                        ExpFunction(mi, "anti"), ExpFunction(mj, "anti"), grid, "anti")
                    reports.append(Report(
                        name=f"torus[anti,M={args.M}] {mi}x{mj}",
                        expected=1.0 if mi == mj else 0.0,
                        observed=val.real if mi == mj else abs(val),
                        tolerance=args.tol,
                    ))
            for i, mi in enumerate(sym_keys):
                for mj in sym_keys[i:]:
                    val = fourier_series.inner_product_fundamental(
                        ExpFunction(mi, "sym"), ExpFunction(mj, "sym"), grid, "sym")
                    expected = float(stabilizer_order(mi)) if mi == mj else 0.0
                    reports.append(Report(
                        name=f"torus[sym,M={args.M}] {mi}x{mj}",
                        expected=expected,
                        observed=val.real if mi == mj else abs(val),
                        tolerance=args.tol,
                    ))
            for mi in sym_keys[:4]:
                for mj in anti_keys[:4]:
                    val = fourier_series.inner_product_fundamental(
                        ExpFunction(mi, "sym"), ExpFunction(mj, "anti"), grid, "mixed")
                    reports.append(Report(
                        name=f"torus[mixed,M={args.M}] {mi}x{mj}",
                        expected=0.0, observed=abs(val), tolerance=args.tol,
                    ))
            return reports

        checks.append(continuous)
    return checks


def _suite_roundtrip(args):
    rng = np.random.default_rng(args.seed)
    n_points, n = args.N, args.n

    def anti():
        grid, _ = discrete.enumerate_ordered(n_points, n, "strict")
        f = rng.normal(size=len(grid)) + 1j * rng.normal(size=len(grid))
        back = discrete.amdft(discrete.amdft(f, n_points, n), n_points, n, "inverse")
        return [Report(f"roundtrip[amdft,N={n_points},n={n}]", 0.0,
                       float(np.max(np.abs(back - f))), args.tol)]

    def sym():
        grid, _ = discrete.enumerate_ordered(n_points, n, "weak")
        f = rng.normal(size=len(grid)) + 1j * rng.normal(size=len(grid))
        back = discrete.smdft(discrete.smdft(f, n_points, n), n_points, n, "inverse")
        return [Report(f"roundtrip[smdft,N={n_points},n={n}]", 0.0,
                       float(np.max(np.abs(back - f))), args.tol)]

    def ft():
        f = rng.normal(size=16) + 1j * rng.normal(size=16)
        back = discrete.ft1d(discrete.ft1d(f), "inverse")
        return [Report("roundtrip[ft1d,N=16]", 0.0,
                       float(np.max(np.abs(back - f))), args.tol)]

    return [anti, sym, ft]


def _suite_laplace(args):
    import mpmath

    rng = np.random.default_rng(args.seed)
    n = args.n

    def check():
        reports = []
        with mpmath.workdps(40):
            for symmetry in ("anti", "sym"):
                lam = rng.uniform(0.5, 2.0, n) * rng.choice([-1.0, 1.0], n)
                if symmetry == "anti":
                    lam = np.sort(lam)[::-1]
                x = tuple(mpmath.mpf(v) for v in rng.uniform(0.05, 0.95, n))
                field = diffops.exp_field(lam, symmetry, dps=40)
                base = complex(field(x))
                for k in range(1, n + 1):
                    eig = diffops.sigma_k_eigenvalue(lam, k)
                    got = complex(diffops.apply_sigma_k(field, x, k))
                    reports.append(Report(
                        name=f"sigma_{k}[{symmetry},n={n}]",
                        expected=1.0,
                        observed=abs(got / (eig * base)),
                        tolerance=1e-3,
                    ))
        return reports

    return [check]


def _suite_hermite(args):
    def phases():
        reports = []
        for m in range(4):
            reports.append(Report(
                name=f"hermite-phase[m={m}]",
                expected=0.0,
                observed=float(hermite.phase_oracle_residual(m)),
                tolerance=1e-8,
            ))
            fourth = hermite.transform_phase(m) ** 4
            reports.append(Report(
                name=f"hermite-phase4[m={m}]",
                expected=1.0, observed=abs(fourth), tolerance=0.0,
            ))
        return reports

    def eigen():
        rng = np.random.default_rng(args.seed)
        reports = []
        for entries, symmetry in (((2, 0), "sym"), ((2, 1), "anti"), ((1, 1), "sym")):
            idx = hermite.HermiteIndex(entries, symmetry)
            sample = [np.sort(rng.uniform(-1.5, 1.5, 2))[::-1] for _ in range(5)]
            reports.append(Report(
                name=f"hermite-eigen[{symmetry},{entries}]",
                expected=0.0,
                observed=float(hermite.eigen_check(idx, sample)),
                tolerance=1e-12,
            ))
        return reports

    def numeric():
        idx = hermite.HermiteIndex((1, 0), "anti")
        lam = np.array([0.9, -0.4])
        box = hermite.TruncationBox(args.L, 161)
        num = hermite.transform_numeric(hermite.HermiteGaussianField(idx), lam, "anti", box)
        ana = hermite.transform_hermite_analytic(idx, lam)
        return [Report("hermite-quadrature[anti,(1,0)]", 0.0, abs(num - ana), 1e-6)]

    return [phases, eigen, numeric]


def _suite_special_cases(args):
    rng = np.random.default_rng(args.seed)

    def products():
        reports = []
        for n in range(2, 6):
            rho = expfun.rho_weight(n)
            rho_p = expfun.rho_prime_weight(n)
            worst_sin = worst_vdm = worst_shift = 0.0
            for _ in range(args.count):
                x = rng.uniform(0.0, 1.0, n)
                worst_sin = max(worst_sin, abs(
                    expfun.eval_antisym(rho, x) - expfun.eval_special(x, "rho_minus")))
                worst_vdm = max(worst_vdm, abs(
                    expfun.eval_antisym(rho_p, x) - expfun.eval_special(x, "rho_prime")))
                shift = np.exp(1j * np.pi * np.sum(x) * (n - 1))
                worst_shift = max(worst_shift, abs(
                    expfun.eval_antisym(rho_p, x) - shift * expfun.eval_antisym(rho, x)))
            reports.append(Report(f"special[sin-product,n={n}]", 0.0, worst_sin, args.tol))
            reports.append(Report(f"special[vandermonde,n={n}]", 0.0, worst_vdm, args.tol))
            reports.append(Report(f"special[staircase-shift,n={n}]", 0.0, worst_shift, args.tol))
        # the cosine product equals E+ only at n=2 (it does not factor beyond)
        worst_cos = 0.0
        for _ in range(args.count):
            x = rng.uniform(0.0, 1.0, 2)
            worst_cos = max(worst_cos, abs(
                expfun.eval_sym(expfun.rho_weight(2), x) - expfun.eval_special(x, "rho_plus")))
        reports.append(Report("special[cos-product,n=2]", 0.0, worst_cos, args.tol))
        return reports

    return [products]


SUITES = {
    "orthogonality": _suite_orthogonality,
    "roundtrip": _suite_roundtrip,
    "laplace": _suite_laplace,
    "hermite": _suite_hermite,
    "special-cases": _suite_special_cases,
}


def _cmd_verify(args) -> int:
    makers = SUITES[args.suite](args)
    reports = _run_checks(makers)
    failed = [r for r in reports if not r.passed]
    if args.json:
        payload = {
            "suite": args.suite,
            "checks": [dict(asdict(r), passed=r.passed) for r in reports],
            "passed": len(reports) - len(failed),
            "failed": len(failed),
        }
        _emit(payload, True)
    else:
        for r in reports:
            print(r.line())
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------- bench


def _median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def _cmd_bench(args) -> int:
    rng = np.random.default_rng(args.seed)
    rows = []
    cases = [("eval_antisym", n) for n in (6, 8)] + [("eval_sym", n) for n in (6, 8, 10)]
    for op, n in cases:
        lam = rng.uniform(-2, 2, n)
        x = rng.uniform(0, 1, n)
        call = expfun.eval_antisym if op == "eval_antisym" else expfun.eval_sym
        call(lam, x, "fast")  # warm caches before timing
        fast = _median_time(lambda: call(lam, x, "fast"), args.reps)
        naive_reps = 1 if n >= 9 else min(args.reps, 3)
        naive = _median_time(lambda: call(lam, x, "naive_sum"), naive_reps)
        rows.append({
            "op": op, "n": n,
            "naive_seconds": naive, "fast_seconds": fast,
            "speedup": naive / fast if fast > 0 else float("inf"),
        })
    if args.json:
        _emit({"benchmarks": rows}, True)
    else:
        for row in rows:
            print(f"{row['op']} n={row['n']}: naive {row['naive_seconds']:.4e}s "
                  f"fast {row['fast_seconds']:.4e}s speedup {row['speedup']:.1f}x")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symxform",
        description="Symmetric/antisymmetric multivariate exponential functions "
                    "and their Fourier transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_flags(p):
        group = p.add_mutually_exclusive_group(required=False)
        group.add_argument("--sym", action="store_true", help="symmetric class")
        group.add_argument("--anti", action="store_true", help="antisymmetric class")

    p = sub.add_parser("eval", help="evaluate E+/-_lambda(x)")
    add_class_flags(p)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated weight")
    p.add_argument("--x", required=True, help="comma-separated point")
    p.add_argument("--naive", action="store_true", help="use the n!-term oracle path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="torus samples (CSV) -> coefficients (JSON)")
    add_class_flags(p)
    p.add_argument("--M", type=int, required=True, help="torus grid points per axis")
    p.add_argument("--n", type=int, help="dimension (inferred from the file if omitted)")
    p.add_argument("--max-entry", type=int, default=3, help="spectrum entry bound")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("synthesize", help="coefficients (JSON) -> values")
    add_class_flags(p)
    p.add_argument("--x", help="single evaluation point (comma-separated)")
    p.add_argument("--M", type=int, default=8, help="torus grid for file output")
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dft", help="discrete transform between CSV samples and JSON coefficients")
    add_class_flags(p)
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--forward", action="store_true")
    direction.add_argument("--inverse", action="store_true")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    add_class_flags(p)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--M", type=int, default=0, help="torus grid (adds continuous checks)")
    p.add_argument("--L", type=float, default=6.0, help="quadrature half-width")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20, help="random points per check")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bench", help="naive vs fast evaluation timings")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    return parser


COMMANDS = {
    "eval": _cmd_eval,
    "analyze": _cmd_analyze,
    "synthesize": _cmd_synthesize,
    "dft": _cmd_dft,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalize others
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return COMMANDS[args.command](args)
    except (ShapeError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())
