"""Finite 1-D Fourier transform and the multivariate discrete transforms.

The grids live on F_N = {1/N, ..., (N-1)/N, 1}; ordered grids take strictly
decreasing (F-hat) or non-increasing (F-breve) coordinate tuples, paired with
the spectrum sets N >= m_1 > ... > m_n > 0 and N >= m_1 >= ... >= m_n >= 1.
Grid points are carried as integer numerators k (s = k/N) so file formats and
basis phases stay exact; basis matrices are built from the N-th roots of
unity indexed by integer dot products mod N.

Transforms are dense matrix applications -- spectrum sizes at desk scale stay
small and correctness is the point; no FFT factorization is attempted.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from .errors import EmptyGridError, ShapeError, SizeLimitError
from .fourier_series import CoefficientMap
from .symgroup import _inversion_sign, stabilizer_order
from .validation import as_int_tuple

GRAM_MAX_SIZE = 10_000


def grid_nodes_1d(n_points: int) -> np.ndarray:
    """The 1-D grid F_N = {1/N, 2/N, ..., (N-1)/N, 1}, |F_N| = N."""
    if n_points < 1:
        raise ValueError("N must be >= 1")
    return np.arange(1, n_points + 1) / n_points


def ft1d_matrix(n_points: int) -> np.ndarray:
    """The unitary matrix e_{mn} = N^(-1/2) exp(2 pi i m n / N), m, n in 1..N."""
    if n_points < 1:
        raise ValueError("N must be >= 1")
    idx = np.arange(1, n_points + 1)
    return np.exp(2j * np.pi * np.outer(idx, idx) / n_points) / math.sqrt(n_points)


def ft1d(values, direction: str = "forward") -> np.ndarray:
    """Finite Fourier transform of N values indexed by 1..N.

    forward: f~(m) = N^(-1/2) sum_n f(n) e^(2 pi i m n / N); inverse uses the
    conjugate kernel, so inverse(forward(f)) = f by unitarity.
    """
    v = np.asarray(values, dtype=complex).ravel()
    e = ft1d_matrix(v.size)
    if direction == "forward":
        return e @ v
    if direction == "inverse":
        return np.conj(e) @ v
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


class OrderedGrid:
    """Ordered grid points on F_N^n, stored as integer numerator tuples."""

    def __init__(self, n_points: int, n: int, kind: str, numerators):
        self.N = n_points
        self.n = n
        self.kind = kind
        self.numerators = tuple(numerators)

    def __len__(self):
        return len(self.numerators)

    def points(self) -> np.ndarray:
        """Grid points as fractions, shape (len, n)."""
        return np.asarray(self.numerators, dtype=float) / self.N

    def index(self, numerator) -> int:
        return self.numerators.index(tuple(numerator))


class SpectrumSet:
    """Integer spectrum tuples paired with an ordered grid."""

    def __init__(self, n_points: int, n: int, kind: str, tuples):
        self.N = n_points
        self.n = n
        self.kind = kind
        self.tuples = tuple(tuples)

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def index(self, m) -> int:
        return self.tuples.index(tuple(m))


@functools.lru_cache(maxsize=None)
def enumerate_ordered(n_points: int, n: int, kind: str):
    """Ordered grid and matching spectrum for (N, n).

    kind='strict': C(N, n) strictly decreasing tuples; kind='weak':
    C(N+n-1, n) non-increasing ones.  Both enumerated lexicographically
    descending so vector layouts are reproducible.
    """
    if n < 1 or n_points < 1:
        raise ValueError("N and n must be positive")
    rng = range(n_points, 0, -1)
    if kind == "strict":
        if n > n_points:
            raise EmptyGridError(f"no strictly decreasing {n}-tuples from 1..{n_points}")
        combos = sorted(itertools.combinations(rng, n), reverse=True)
    elif kind == "weak":
        combos = sorted(itertools.combinations_with_replacement(rng, n), reverse=True)
    else:
        raise ValueError(f"kind must be 'strict' or 'weak', got {kind!r}")
    grid = OrderedGrid(n_points, n, kind, combos)
    spectrum = SpectrumSet(n_points, n, kind, combos)
    return grid, spectrum


def _norm_factor(n_points: int, n: int) -> float:
    # |S_n|^(-1/2) N^(-n/2) for both classes: this is what makes the
    # symmetric Gram come out as diag(|S_m|).
    return 1.0 / math.sqrt(math.factorial(n)) / n_points ** (n / 2.0)


@functools.lru_cache(maxsize=None)
def _basis_matrix(n_points: int, n: int, symmetry: str):
    """Matrix of E+/-_m(s) over (grid row, spectrum column), exact phases.

    Entries are sums over permutations of roots of unity picked by the
    integer dot product m . (w s) mod N.
    """
    kind = "strict" if symmetry == "anti" else "weak"
    grid, spectrum = enumerate_ordered(n_points, n, kind)
    roots = np.exp(2j * np.pi * np.arange(n_points) / n_points)
    k = np.asarray(grid.numerators, dtype=np.int64)  # (G, n)
    m = np.asarray(spectrum.tuples, dtype=np.int64)  # (S, n)
    out = np.zeros((k.shape[0], m.shape[0]), dtype=complex)
    anti = symmetry == "anti"
    for mapping in itertools.permutations(range(n)):
        sign = _inversion_sign(mapping)
        phases = (k[:, mapping] @ m.T) % n_points
        term = roots[phases]
        if anti and sign < 0:
            out -= term
        else:
            out += term
    return grid, spectrum, out


def basis_matrix(n_points: int, n: int, symmetry: str):
    """Normalized basis matrix B[s, m] = E~+/-_m(s) with its grid/spectrum."""
    grid, spectrum, raw = _basis_matrix(n_points, n, symmetry)
    return grid, spectrum, raw * _norm_factor(n_points, n)


def eval_discrete(m, s, n_points: int, symmetry: str = "anti") -> complex:
    """E~+/-_m(s) = |S_n|^(-1/2) N^(-n/2) E+/-_m(s) at a single grid point.

    ``s`` is given as fractions (entries k/N).
    """
    from .expfun import eval_antisym, eval_sym

    m = as_int_tuple(m)
    s = tuple(float(v) for v in s)
    if len(m) != len(s):
        raise ShapeError(f"m and s have different lengths: {len(m)} vs {len(s)}")
    raw = eval_antisym(m, s) if symmetry == "anti" else eval_sym(m, s)
    return raw * _norm_factor(n_points, len(m))


def _point_stabilizers(grid: OrderedGrid) -> np.ndarray:
    return np.array([stabilizer_order(k) for k in grid.numerators], dtype=float)


def _weight_stabilizers(spectrum: SpectrumSet) -> np.ndarray:
    return np.array([stabilizer_order(m) for m in spectrum.tuples], dtype=float)


def amdft(values, n_points: int, n: int, direction: str = "forward"):
    """Antisymmetric multivariate discrete Fourier transform.

    forward: values on the strict grid (in enumeration order) -> CoefficientMap
    over the strict spectrum, a_m = n! sum_s f(s) conj(E~-_m(s)).
    inverse: CoefficientMap (or a vector in spectrum order) -> values,
    f(s) = sum_m a_m E~-_m(s).
    """
    grid, spectrum, b = basis_matrix(n_points, n, "anti")
    order = math.factorial(n)
    if direction == "forward":
        v = _as_grid_vector(values, grid)
        coeffs = order * (b.conj().T @ v)
        return CoefficientMap("anti", dict(zip(spectrum.tuples, coeffs)))
    if direction == "inverse":
        a = _as_spectrum_vector(values, spectrum)
        return b @ a
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def smdft(values, n_points: int, n: int, direction: str = "forward"):
    """Symmetric multivariate discrete Fourier transform.

    forward: a_m = (n! / |S_m|) sum_s |S_s|^(-1) f(s) conj(E~+_m(s)) over the
    weak grid; inverse: f(s) = sum_m a_m E~+_m(s).
    """
    grid, spectrum, b = basis_matrix(n_points, n, "sym")
    order = math.factorial(n)
    if direction == "forward":
        v = _as_grid_vector(values, grid)
        ws = _point_stabilizers(grid)
        wm = _weight_stabilizers(spectrum)
        coeffs = order / wm * (b.conj().T @ (v / ws))
        return CoefficientMap("sym", dict(zip(spectrum.tuples, coeffs)))
    if direction == "inverse":
        a = _as_spectrum_vector(values, spectrum)
        return b @ a
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def _as_grid_vector(values, grid: OrderedGrid) -> np.ndarray:
    v = np.asarray(values, dtype=complex).ravel()
    if v.size != len(grid):
        raise ShapeError(f"expected {len(grid)} grid values, got {v.size}")
    return v


def _as_spectrum_vector(values, spectrum: SpectrumSet) -> np.ndarray:
    if isinstance(values, CoefficientMap):
        missing = set(spectrum.tuples) - set(values.keys())
        extra = set(values.keys()) - set(spectrum.tuples)
        if missing or extra:
            raise ShapeError(
                f"coefficient keys do not match the spectrum "
                f"({len(missing)} missing, {len(extra)} extra)"
            )
        return np.array([values[m] for m in spectrum.tuples], dtype=complex)
    v = np.asarray(values, dtype=complex).ravel()
    if v.size != len(spectrum):
        raise ShapeError(f"expected {len(spectrum)} coefficients, got {v.size}")
    return v


def gram_matrix(n_points: int, n: int, symmetry: str) -> np.ndarray:
    """Weighted Gram matrix of the discrete basis over the spectrum set.

    anti: n! B^H B, expected to be the identity; sym: n! B^H diag(1/|S_s|) B,
    expected to be diag(|S_m|).
    """
    grid, spectrum, b = basis_matrix(n_points, n, symmetry)
    if len(spectrum) > GRAM_MAX_SIZE:
        raise SizeLimitError(f"spectrum size {len(spectrum)} exceeds {GRAM_MAX_SIZE}")
    order = math.factorial(n)
    if symmetry == "anti":
        return order * (b.conj().T @ b)
    ws = _point_stabilizers(grid)
    return order * (b.conj().T @ (b / ws[:, None]))
