"""File formats: JSON coefficient maps and CSV sample tables.

Coefficients: a JSON array of records ``{"m": [ints...], "re": float,
"im": float}`` in lexicographically descending key order.  Samples: CSV with
header ``x1,...,xn,re,im``; discrete-grid coordinates are written as integer
numerators (exact rationals k/N, with N carried out-of-band) to avoid float
drift in indexing.
"""

from __future__ import annotations

import csv
import json

import numpy as np

from .errors import ShapeError
from .fourier_series import CoefficientMap


def dump_coefficients(coeffs: CoefficientMap, path) -> None:
    records = [
        {"m": list(m), "re": c.real, "im": c.imag}
        for m, c in sorted(coeffs.items(), reverse=True)
    ]
    with open(path, "w") as fh:
        json.dump(records, fh, indent=1)
        fh.write("\n")


def load_coefficients(path, symmetry: str) -> CoefficientMap:
    with open(path) as fh:
        records = json.load(fh)
    if not isinstance(records, list):
        raise ShapeError("coefficient file must hold a JSON array of records")
    data = {}
    for rec in records:
        key = tuple(int(v) for v in rec["m"])
        data[key] = complex(float(rec["re"]), float(rec["im"]))
    return CoefficientMap(symmetry, data)


def dump_samples(coords, values, path, integer_coords: bool = False) -> None:
    """Write rows of (coordinates, re, im); coords shape (rows, n)."""
    coords = np.asarray(coords)
    values = np.asarray(values, dtype=complex).ravel()
    if coords.ndim != 2 or coords.shape[0] != values.size:
        raise ShapeError(
            f"coords shape {coords.shape} does not match {values.size} values"
        )
    n = coords.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{i + 1}" for i in range(n)] + ["re", "im"])
        for row, val in zip(coords, values):
            if integer_coords:
                cells = [str(int(round(c))) for c in row]
            else:
                cells = [repr(float(c)) for c in row]
            writer.writerow(cells + [repr(float(val.real)), repr(float(val.imag))])


def load_samples(path):
    """Read a sample CSV; returns (coords (rows, n) float array, complex values)."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if len(header) < 3 or header[-2:] != ["re", "im"]:
            raise ShapeError("sample file must end with 're,im' columns")
        n = len(header) - 2
        coords, values = [], []
        for row in reader:
            if not row:
                continue
            if len(row) != n + 2:
                raise ShapeError(f"row has {len(row)} cells, expected {n + 2}")
            coords.append([float(c) for c in row[:n]])
            values.append(complex(float(row[n]), float(row[n + 1])))
    return np.asarray(coords, dtype=float), np.asarray(values, dtype=complex)
