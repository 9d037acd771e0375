"""Torus inner products and Fourier series in E+/-_m with integer m.

Integrals over the affine fundamental domain are computed as torus integrals
divided by n! (the domain tiles the unit torus under the group action, so
``|F| = 1/n!`` with the torus normalized to measure 1).  Uniform tensor grids
integrate trigonometric polynomials exactly as long as every frequency
component stays below half the per-axis point count, so every inner product
here is exact (to rounding) for band-limited inputs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SymmetryError
from .expfun import ExpFunction
from .symgroup import stabilizer_order
from .validation import check_spectrum_key


@dataclass(frozen=True)
class TorusGrid:
    """Uniform tensor grid {0, 1/M, ..., (M-1)/M}^n with weight M^-n."""

    points_per_axis: int
    n: int

    def __post_init__(self):
        if self.points_per_axis < 1:
            raise ValueError("points_per_axis must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def size(self) -> int:
        return self.points_per_axis**self.n

    @property
    def weight(self) -> float:
        return float(self.points_per_axis) ** (-self.n)

    def points(self) -> np.ndarray:
        """All grid points, shape (M^n, n), axes varying last-fastest."""
        m = self.points_per_axis
        axes = np.arange(m) / m
        grids = np.meshgrid(*([axes] * self.n), indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=-1)


def grid_for_spectrum(spectrum, n: int, points_per_axis: int | None = None) -> TorusGrid:
    """Default exact grid for a spectrum: M = 2*max|entry| + 2 unless overridden."""
    if points_per_axis is None:
        fmax = max((max(abs(v) for v in m) for m in spectrum), default=0)
        points_per_axis = int(2 * fmax + 2)
    return TorusGrid(points_per_axis, n)


def sample_on_grid(f, grid: TorusGrid) -> np.ndarray:
    """Evaluate a field on the grid, using a vectorized path when available."""
    if isinstance(f, np.ndarray):
        if f.shape != (grid.size,):
            raise ValueError(f"samples have shape {f.shape}, expected ({grid.size},)")
        return f.astype(complex, copy=False)
    pts = grid.points()
    if hasattr(f, "on_points"):
        return np.asarray(f.on_points(pts), dtype=complex)
    return np.array([f(p) for p in pts], dtype=complex)


def _probe_symmetry(f, n: int, expected: str, tol: float = 1e-8):
    """Check f(wx) = f(x) (sym) or -f(x) (anti) for a transposition at probe points."""
    if not callable(f):
        return  # precomputed samples cannot be probed
    probes = [
        tuple(0.137 + 0.61 * k / n for k in range(n)),
        tuple(0.829 - 0.47 * k / n for k in range(n)),
    ]
    sgn = 1.0 if expected == "sym" else -1.0
    for p in probes:
        swapped = (p[1], p[0]) + p[2:]
        a, b = complex(f(p)), complex(f(swapped))
        scale = max(abs(a), abs(b), 1e-30)
        if abs(b - sgn * a) > tol * scale:
            raise SymmetryError(
                f"field is not {expected}: f(wx)={b!r} vs expected {sgn * a!r}"
            )


@dataclass
class CoefficientMap:
    """Finite spectral data: canonical integer weights -> complex coefficients.

    Keys must already be canonical (strictly dominant for 'anti', dominant for
    'sym'); non-canonical keys are rejected rather than silently reordered.
    """

    symmetry: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.symmetry not in ("sym", "anti"):
            raise ValueError(f"symmetry must be 'sym' or 'anti', got {self.symmetry!r}")
        clean = {}
        for m, c in dict(self.data).items():
            clean[check_spectrum_key(m, self.symmetry)] = complex(c)
        self.data = clean

    def __len__(self):
        return len(self.data)

    def __getitem__(self, m):
        return self.data[tuple(int(v) for v in m)]

    def __contains__(self, m):
        return tuple(int(v) for v in m) in self.data

    def items(self):
        return self.data.items()

    def keys(self):
        return self.data.keys()


def inner_product_torus(f, g, grid: TorusGrid) -> complex:
    """M^-n sum over the grid of f * conj(g): the torus L2 inner product.

    Exact for trigonometric polynomials whose per-axis frequencies are below
    M/2 in absolute value; an approximation otherwise.
    """
    fs = sample_on_grid(f, grid)
    gs = sample_on_grid(g, grid)
    return complex(np.vdot(gs, fs)) * grid.weight


def inner_product_fundamental(f, g, grid: TorusGrid, symmetry: str) -> complex:
    """Inner product over the affine fundamental domain (or F_ext for 'mixed').

    'sym'/'anti': both fields share the class, the integrand is invariant, and
    the integral is the torus value divided by n!.  'mixed': f symmetric and g
    antisymmetric, integrated over the fundamental domain plus one reflected
    copy; the integrand alternates, so the value is 2/n! times the torus
    integral (which vanishes by cancellation).
    """
    n = grid.n
    order = math.factorial(n)
    if symmetry in ("sym", "anti"):
        _probe_symmetry(f, n, symmetry)
        _probe_symmetry(g, n, symmetry)
        return inner_product_torus(f, g, grid) / order
    if symmetry == "mixed":
        _probe_symmetry(f, n, "sym")
        _probe_symmetry(g, n, "anti")
        return 2.0 / order * inner_product_torus(f, g, grid)
    raise ValueError(f"symmetry must be 'sym', 'anti' or 'mixed', got {symmetry!r}")


def analyze(f, symmetry: str, spectrum, grid: TorusGrid) -> CoefficientMap:
    """Project f onto the E+/-_m basis over the given spectrum.

    c_m = <f, E+_m>_F / |S_m| for the symmetric class and c_m = <f, E-_m>_F
    for the antisymmetric one.  Exact when f is band-limited below the grid
    Nyquist frequency.
    """
    keys = [check_spectrum_key(m, symmetry) for m in spectrum]
    fs = sample_on_grid(f, grid)
    if callable(f):
        _probe_symmetry(f, grid.n, symmetry)
    order = math.factorial(grid.n)
    data = {}
    for m in keys:
        basis = sample_on_grid(ExpFunction(m, symmetry), grid)
        c = complex(np.vdot(basis, fs)) * grid.weight / order
        if symmetry == "sym":
            c /= stabilizer_order(m)
        data[m] = c
    return CoefficientMap(symmetry, data)


def synthesize(coeffs, x) -> complex:
    """Evaluate sum_m c_m E+/-_m(x).

    ``coeffs`` is a CoefficientMap or an iterable of them (supply one of each
    class for a mixed expansion; the series are summed).
    """
    maps = [coeffs] if isinstance(coeffs, CoefficientMap) else list(coeffs)
    x = np.asarray(x, dtype=float)
    total = 0j
    for cm in maps:
        for m, c in cm.items():
            total += c * ExpFunction(m, cm.symmetry)(x)
    return total


def synthesize_on_points(coeffs, points) -> np.ndarray:
    """Vectorized :func:`synthesize` over points of shape (npoints, n)."""
    maps = [coeffs] if isinstance(coeffs, CoefficientMap) else list(coeffs)
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[np.newaxis, :]
    total = np.zeros(pts.shape[0], dtype=complex)
    for cm in maps:
        for m, c in cm.items():
            total += c * ExpFunction(m, cm.symmetry).on_points(pts)
    return total


def plancherel_check(f, coeffs: CoefficientMap, grid: TorusGrid):
    """Both sides of the Plancherel identity for the declared class.

    Antisymmetric: sum |c_m|^2 = integral of |f|^2 over the fundamental
    domain.  Symmetric: the stabilizer-weighted form sum |S_m| |c_m|^2 (the
    squared basis norms are |S_m|, so this is the form that balances).
    """
    lhs = 0.0
    for m, c in coeffs.items():
        w = stabilizer_order(m) if coeffs.symmetry == "sym" else 1
        lhs += w * abs(c) ** 2
    fs = sample_on_grid(f, grid)
    rhs = float(np.sum(np.abs(fs) ** 2)) * grid.weight / math.factorial(grid.n)
    return lhs, rhs


def integer_spectrum(n: int, max_entry: int, symmetry: str, min_entry: int = 0):
    """All canonical integer weights with entries in [min_entry, max_entry].

    Strictly decreasing tuples for 'anti', non-increasing for 'sym'; ordered
    lexicographically descending.
    """
    rng = range(max_entry, min_entry - 1, -1)
    if symmetry == "anti":
        combos = itertools.combinations(rng, n)
    elif symmetry == "sym":
        combos = itertools.combinations_with_replacement(rng, n)
    else:
        raise ValueError(f"symmetry must be 'sym' or 'anti', got {symmetry!r}")
    return sorted(combos, reverse=True)
