"""Symmetric (E+) and antisymmetric (E-) multivariate exponential functions.

Both are built from the n x n matrix ``exp(2 pi i lambda_i x_j)``:

* ``E-`` is its determinant, equivalently ``sum_w det(w) exp(2 pi i <lam, wx>)``;
* ``E+`` is its permanent (the "antideterminant": the same expansion with all
  plus signs).

Every evaluator exposes two routes. ``method="naive_sum"`` is the transparent
n!-term permutation sum kept as the oracle; ``method="fast"`` is LU
factorization for the determinant (O(n^3)) and a Gray-code Ryser permanent
(O(2^n n)) for the antideterminant.
"""

from __future__ import annotations

import cmath
import functools
import itertools
import math

import numpy as np

from .errors import SizeLimitError
from .symgroup import _inversion_sign
from .validation import check_same_length

TWO_PI = 2.0 * math.pi
NAIVE_MAX_N = 10
RYSER_MAX_N = 24

EVAL_METHODS = ("fast", "naive_sum")


@functools.lru_cache(maxsize=None)
def _signed_index_perms(n: int):
    """All permutations of range(n) with signs, cached for small n."""
    perms = []
    for p in itertools.permutations(range(n)):
        perms.append((p, _inversion_sign(p)))
    return tuple(perms)


def _iter_signed_index_perms(n: int):
    if n <= 8:
        return _signed_index_perms(n)
    return ((p, _inversion_sign(p)) for p in itertools.permutations(range(n)))


def _naive_sum(lam, x, anti: bool) -> complex:
    n = len(lam)
    if n > NAIVE_MAX_N:
        raise SizeLimitError(f"naive_sum supports n <= {NAIVE_MAX_N}, got {n}")
    lam = tuple(float(v) for v in lam)
    xs = tuple(float(v) for v in x)
    exp = cmath.exp
    total = 0j
    if anti:
        for mapping, sign in _iter_signed_index_perms(n):
            ang = 0.0
            for li, j in zip(lam, mapping):
                ang += li * xs[j]
            total += sign * exp(TWO_PI * 1j * ang)
    else:
        # signs are irrelevant for the permanent; skip computing them
        for mapping in itertools.permutations(range(n)):
            ang = 0.0
            for li, j in zip(lam, mapping):
                ang += li * xs[j]
            total += exp(TWO_PI * 1j * ang)
    return total


def phase_matrix(lam, x) -> np.ndarray:
    """The n x n matrix exp(2 pi i lambda_i x_j)."""
    lam, x = check_same_length(lam, x)
    return np.exp(TWO_PI * 1j * np.outer(lam, x))


def ryser_permanent(a) -> complex:
    """Permanent of a square matrix by Ryser's inclusion-exclusion.

    Subsets are visited in Gray-code order so each step updates the running
    row sums by a single column. O(2^n n) work; guarded at n <= 24 (the top
    end takes minutes -- desk scale is n <= 10).
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > RYSER_MAX_N:
        raise SizeLimitError(f"permanent supports n <= {RYSER_MAX_N}, got {n}")
    if n == 0:
        return 1.0
    row = np.zeros(n, dtype=np.result_type(a.dtype, float))
    total = row.dtype.type(0)
    gray = 0
    sign = 1  # (-1)^|S|, flips every Gray step
    for k in range(1, 1 << n):
        g = k ^ (k >> 1)
        j = (g ^ gray).bit_length() - 1
        if g > gray:
            row += a[:, j]
        else:
            row -= a[:, j]
        gray = g
        sign = -sign
        total += sign * row.prod()
    if n % 2:
        total = -total
    return complex(total) if np.iscomplexobj(a) else float(total)


def eval_antisym(lam, x, method: str = "fast") -> complex:
    """E-_lambda(x) = det(exp(2 pi i lambda_i x_j))."""
    lam, x = check_same_length(lam, x)
    if method == "fast":
        return complex(np.linalg.det(np.exp(TWO_PI * 1j * np.outer(lam, x))))
    if method == "naive_sum":
        return _naive_sum(lam, x, anti=True)
    raise ValueError(f"unknown method {method!r}")


def eval_sym(lam, x, method: str = "fast") -> complex:
    """E+_lambda(x) = per(exp(2 pi i lambda_i x_j))."""
    lam, x = check_same_length(lam, x)
    if method == "fast":
        return complex(ryser_permanent(np.exp(TWO_PI * 1j * np.outer(lam, x))))
    if method == "naive_sum":
        return _naive_sum(lam, x, anti=False)
    raise ValueError(f"unknown method {method!r}")


def eval_on_points(lam, points, symmetry: str) -> np.ndarray:
    """Vectorized E+/- over an array of points of shape (npoints, n).

    Sums the permutation expansion one permutation at a time, so it is meant
    for the small n (<= 8) used by grids and quadratures.
    """
    lam = np.asarray(lam, dtype=float).ravel()
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[np.newaxis, :]
    n = lam.size
    if pts.shape[1] != n:
        raise ValueError(f"points have {pts.shape[1]} columns, expected {n}")
    if n > 8:
        raise SizeLimitError("vectorized evaluation supports n <= 8")
    anti = _check_symmetry_name(symmetry) == "anti"
    total = np.zeros(pts.shape[0], dtype=complex)
    for mapping, sign in _signed_index_perms(n):
        phases = pts[:, mapping] @ lam
        term = np.exp(TWO_PI * 1j * phases)
        if anti and sign < 0:
            total -= term
        else:
            total += term
    return total


def _check_symmetry_name(symmetry: str) -> str:
    if symmetry not in ("sym", "anti"):
        raise ValueError(f"symmetry must be 'sym' or 'anti', got {symmetry!r}")
    return symmetry


class ExpFunction:
    """E+/-_lambda as a callable field with a vectorized sampling path."""

    def __init__(self, lam, symmetry: str):
        self.lam = np.asarray(lam, dtype=float).ravel()
        self.symmetry = _check_symmetry_name(symmetry)
        self.n = self.lam.size

    def __call__(self, x) -> complex:
        if self.symmetry == "anti":
            return eval_antisym(self.lam, x)
        return eval_sym(self.lam, x)

    def on_points(self, points) -> np.ndarray:
        return eval_on_points(self.lam, points, self.symmetry)

    def __repr__(self):
        return f"ExpFunction({tuple(self.lam)}, {self.symmetry!r})"


def rho_weight(n: int) -> np.ndarray:
    """The half-sum weight (1/2)(n-1, n-3, ..., -n+1)."""
    return (n - 1 - 2 * np.arange(n)) / 2.0


def rho_prime_weight(n: int) -> np.ndarray:
    """The staircase weight (n-1, n-2, ..., 1, 0)."""
    return np.arange(n - 1, -1, -1, dtype=float)


def eval_special(x, kind: str) -> complex:
    """Closed-form products for the special weights rho and rho'.

    * ``rho_minus``: (2i)^(n(n-1)/2) prod_{i<j} sin pi(x_i - x_j), which equals
      E-_rho(x) for every n.
    * ``rho_plus``: 2^(n(n-1)/2) prod_{i<j} cos pi(x_i - x_j).  This equals
      E+_rho(x) only for n <= 2; for n >= 3 the permanent does not factor and
      the product differs from E+_rho (the expansion of the product contains
      one term per orientation of K_n, and only the transitive orientations
      are permutation terms).
    * ``rho_prime``: the Vandermonde product prod_{k<l} (e^{2 pi i x_k} -
      e^{2 pi i x_l}) in z_j = e^{2 pi i x_j}, which equals E-_rho'(x).
    """
    x = np.asarray(x, dtype=float).ravel()
    n = x.size
    if n < 2:
        raise ValueError("special-case products need n >= 2")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == "rho_minus":
        prod = np.prod([np.sin(np.pi * (x[i] - x[j])) for i, j in pairs])
        return complex((2j) ** (n * (n - 1) // 2) * prod)
    if kind == "rho_plus":
        prod = np.prod([np.cos(np.pi * (x[i] - x[j])) for i, j in pairs])
        return complex(2 ** (n * (n - 1) // 2) * prod)
    if kind == "rho_prime":
        z = np.exp(TWO_PI * 1j * x)
        return complex(np.prod([z[i] - z[j] for i, j in pairs]))
    raise ValueError(f"unknown special kind {kind!r}")
