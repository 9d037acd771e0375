"""Finite-difference application of the sigma_k differential operators.

``sigma_k(d^2/dx_1^2, ..., d^2/dx_n^2)`` is the k-th elementary symmetric
polynomial in the per-coordinate second derivatives; k = 1 is the Laplacian.
On E+/-_lambda these operators act by the scalar
``(-4 pi^2)^k sigma_k(lambda_1^2, ..., lambda_n^2)``.

The stencil arithmetic is duck-typed: feed it float coordinates and a
complex-valued field for double precision, or mpmath values (see
:func:`exp_field` with ``dps``) when the h^(2k) denominators would otherwise
sink the truncation signal below the double-precision rounding floor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import mpmath

from .errors import SizeLimitError
from .expfun import eval_antisym, eval_sym
from .symgroup import _inversion_sign


@dataclass(frozen=True)
class StencilConfig:
    """Centered second-order stencil with step ``h``."""

    h: float = 1e-3

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("h must be positive")


def sigma_k_eigenvalue(lam, k: int) -> float:
    """(-4 pi^2)^k * sigma_k(lambda_1^2, ..., lambda_n^2)."""
    lam = tuple(float(v) for v in lam)
    n = len(lam)
    if not 1 <= k <= n:
        raise IndexError(f"k must be in 1..{n}, got {k}")
    squares = [v * v for v in lam]
    esp = 0.0
    for subset in itertools.combinations(squares, k):
        esp += math.prod(subset)
    return (-4.0 * math.pi**2) ** k * esp


def apply_sigma_k(f, x, k: int, cfg: StencilConfig | None = None):
    """Apply sigma_k of the coordinate second derivatives to ``f`` at ``x``.

    For every k-subset of coordinates the centered second difference
    ``(f(.+h e_i) - 2 f(.) + f(.-h e_i)) / h^2`` is nested across the subset
    (3^k stencil points, compositions over distinct coordinates commute
    exactly), and the subsets are summed.
    """
    cfg = cfg or StencilConfig()
    coords = tuple(x)
    n = len(coords)
    if not 1 <= k <= n:
        raise IndexError(f"k must be in 1..{n}, got {k}")
    h = cfg.h
    scale = h ** (2 * k)
    total = None
    for subset in itertools.combinations(range(n), k):
        for offsets in itertools.product((-1, 0, 1), repeat=k):
            coeff = 1
            for o in offsets:
                if o == 0:
                    coeff *= -2
            pt = list(coords)
            for axis, o in zip(subset, offsets):
                if o:
                    pt[axis] = pt[axis] + o * h
            term = coeff * f(tuple(pt))
            total = term if total is None else total + term
    return total / scale


def exp_field(lam, symmetry: str, dps: int | None = None):
    """A field callable evaluating E+/-_lambda, optionally in mpmath precision.

    With ``dps`` set the returned callable does the n!-term permutation sum in
    ``dps``-digit arithmetic (n <= 6 guard) and returns ``mpmath.mpc``;
    coordinates may be floats or mpf. Otherwise it is the double-precision
    fast evaluator.
    """
    if symmetry not in ("sym", "anti"):
        raise ValueError(f"symmetry must be 'sym' or 'anti', got {symmetry!r}")
    anti = symmetry == "anti"
    if dps is None:
        return (lambda pt: eval_antisym(lam, pt)) if anti else (lambda pt: eval_sym(lam, pt))

    lam = tuple(float(v) for v in lam)
    n = len(lam)
    if n > 6:
        raise SizeLimitError("mp-precision fields support n <= 6")
    perms = [
        (p, _inversion_sign(p)) for p in itertools.permutations(range(n))
    ]

    def field(pt):
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            for mapping, sign in perms:
                ang = mpmath.fsum(
                    mpmath.mpf(li) * pt[j] for li, j in zip(lam, mapping)
                )
                term = mpmath.expjpi(2 * ang)
                total += sign * term if anti else term
            return total

    return field
