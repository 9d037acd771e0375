"""Input-validation helpers shared by the numeric modules and estimators."""

from __future__ import annotations

import numpy as np

from .errors import DominanceError, ShapeError
from .symgroup import Weight, classify_dominance


def as_vector(v, name: str = "vector", n: int | None = None) -> np.ndarray:
    """Coerce to a finite 1-D float array, optionally of fixed length."""
    if isinstance(v, Weight):
        v = v.entries
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be 1-D, got shape {arr.shape}")
    if n is not None and arr.size != n:
        raise ShapeError(f"{name} must have length {n}, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def check_same_length(lam, x):
    """Validate a (weight, point) pair; returns both as float arrays."""
    lam = as_vector(lam, "lambda")
    x = as_vector(x, "x", n=lam.size)
    return lam, x


def as_int_tuple(m, name: str = "m") -> tuple:
    entries = tuple(m)
    out = []
    for v in entries:
        iv = int(v)
        if iv != v:
            raise ValueError(f"{name} must have integer entries, got {entries}")
        out.append(iv)
    return tuple(out)


def check_spectrum_key(m, symmetry: str, name: str = "m") -> tuple:
    """Validate a canonical integer spectrum key for the given class.

    'anti' requires strictly dominant keys, 'sym' weakly/strictly dominant.
    Non-canonical keys are rejected rather than silently reordered.
    """
    key = as_int_tuple(m, name)
    dom = classify_dominance(key)
    if symmetry == "anti":
        if dom != "strict":
            raise DominanceError(f"{name}={key} is not strictly dominant")
    elif symmetry == "sym":
        if dom == "none":
            raise DominanceError(f"{name}={key} is not dominant")
    else:
        raise ValueError(f"unknown symmetry class {symmetry!r}")
    return key


def check_complex_matrix(x, n_features: int | None = None, name: str = "X") -> np.ndarray:
    """Coerce to a finite 2-D complex array with the expected column count."""
    arr = np.asarray(x)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {arr.shape}")
    arr = arr.astype(complex, copy=False)
    if n_features is not None and arr.shape[1] != n_features:
        raise ShapeError(
            f"{name} has {arr.shape[1]} columns, expected {n_features}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr
