"""Symmetric-group combinatorics: permutations, signs, dominance, stabilizers.

Permutations act on index sets {1..n}.  Conventions used throughout the
library:

* a ``Permutation`` ``w`` maps ``i`` to ``w.mapping[i-1]``;
* the permuted point ``wx`` has coordinates ``(wx)_i = x_{w(i)}``, which is
  what :meth:`Permutation.apply` computes.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateWeightError, SizeLimitError

MAX_ENUM_N = 10  # factorial blow-up guard for full enumeration


def _inversion_sign(mapping) -> int:
    """Sign (-1)^inversions of a permutation given as a sequence of images."""
    inv = 0
    n = len(mapping)
    for i in range(n):
        mi = mapping[i]
        for j in range(i + 1, n):
            if mi > mapping[j]:
                inv += 1
    return -1 if inv & 1 else 1


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} together with its sign.

    ``mapping[i-1]`` is the image of ``i``; ``sign`` is ``(-1)**inversions``.
    """

    mapping: tuple
    sign: int = field(default=0)

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        n = len(mapping)
        if sorted(mapping) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {mapping}")
        sign = _inversion_sign(mapping)
        if self.sign not in (0, sign):
            raise ValueError(f"declared sign {self.sign} does not match parity {sign}")
        object.__setattr__(self, "sign", sign)

    @property
    def n(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def apply(self, coords):
        """Return the permuted sequence ``wx`` with ``(wx)_i = x_{w(i)}``."""
        if len(coords) != self.n:
            raise ValueError("length mismatch")
        return tuple(coords[j - 1] for j in self.mapping)

    def compose(self, other: "Permutation") -> "Permutation":
        """Return ``self o other``, mapping ``i`` to ``self(other(i))``."""
        return Permutation(tuple(self.mapping[j - 1] for j in other.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.mapping, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))


def classify_dominance(entries) -> str:
    """Classify a weight as 'strict', 'weak' or 'none'.

    'strict' means strictly decreasing entries, 'weak' means non-increasing
    with at least one tie.  Comparison is exact (no tolerance): coincidence
    results such as a vanishing determinant are exact only at exact ties.
    """
    entries = tuple(entries)
    strict = all(a > b for a, b in zip(entries, entries[1:]))
    if strict:
        return "strict"
    if all(a >= b for a, b in zip(entries, entries[1:])):
        return "weak"
    return "none"


@dataclass(frozen=True)
class Weight:
    """A real n-tuple indexing an exponential function."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(float(v) for v in self.entries))

    @property
    def dominance(self) -> str:
        return classify_dominance(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def iter_permutations(n: int):
    """Lazily yield all Permutations of {1..n} in lexicographic order."""
    if n < 1:
        raise SizeLimitError(f"n must be positive, got {n}")
    for mapping in itertools.permutations(range(1, n + 1)):
        yield Permutation(mapping)


def enumerate_permutations(n: int):
    """Return the full list of n! Permutations, lexicographic by mapping.

    Guarded at n <= 10; use :func:`iter_permutations` to stream larger cases.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise SizeLimitError(f"n must be in 1..{MAX_ENUM_N}, got {n}")
    return list(iter_permutations(n))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation w0, with sign (-1)^(n(n-1)/2)."""
    if n < 1:
        raise SizeLimitError(f"n must be positive, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def dominant_sort(v, strict_required: bool = False):
    """Sort ``v`` into non-increasing order.

    Returns ``(Weight, sign)`` where ``sign`` is the sign of the sorting
    permutation (the stable one when entries tie).  With ``strict_required``,
    exactly repeated entries raise :class:`DegenerateWeightError`.
    """
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ValueError("expected a 1-D weight")
    order = np.argsort(-arr, kind="stable")
    sorted_entries = tuple(arr[order])
    if strict_required:
        for a, b in zip(sorted_entries, sorted_entries[1:]):
            if a == b:
                raise DegenerateWeightError(f"repeated entry {a} in {tuple(arr)}")
    sign = _inversion_sign(tuple(int(i) + 1 for i in order))
    return Weight(sorted_entries), sign


def stabilizer_order(m) -> int:
    """|S_m|: the number of permutations fixing m = product of multiplicity factorials."""
    entries = tuple(m)
    out = 1
    for count in Counter(entries).values():
        out *= math.factorial(count)
    return out


def reduce_to_affine_fundamental(x):
    """Reduce a point to the closure of the affine fundamental domain.

    Takes fractional parts (``t - floor(t)``, so 1.0 maps to 0.0, removing
    integer shifts) and sorts them non-increasingly.  Returns the reduced
    point as an ndarray together with the sorting permutation ``w`` such that
    ``reduced[i] = frac(x)[w(i) - 1]``.  Boundary points (tied coordinates)
    are returned as-is: the closure contains one point of every orbit.
    """
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError("expected a 1-D point")
    frac = arr - np.floor(arr)
    order = np.argsort(-frac, kind="stable")
    perm = Permutation(tuple(int(i) + 1 for i in order))
    return frac[order], perm
