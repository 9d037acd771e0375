"""Scikit-learn style front-ends for the discrete and series transforms.

Rows are samples: for the discrete transformers each row holds the values of
one function on the ordered grid (in enumeration order) and transforms to its
coefficient vector (in spectrum order); for the torus-series transformer each
row holds samples on the flattened tensor grid.  All three follow the
fit/transform/inverse_transform/get_params contract, so they compose with
pipelines and model-selection tooling.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .discrete import basis_matrix
from .expfun import ExpFunction
from .fourier_series import TorusGrid, integer_spectrum
from .symgroup import stabilizer_order
from .validation import check_complex_matrix


class _DiscreteTransformBase(TransformerMixin, BaseEstimator):
    """Shared machinery: basis in ``basis_`` (grid rows, spectrum columns)."""

    _symmetry = None  # set by subclasses

    def __init__(self, N=4, n=2):
        self.N = N
        self.n = n

    def fit(self, X=None, y=None):
        """Build the basis for (N, n); X is only shape-checked if given."""
        grid, spectrum, basis = basis_matrix(int(self.N), int(self.n), self._symmetry)
        self.grid_ = grid
        self.spectrum_ = spectrum
        self.basis_ = basis
        self.n_features_in_ = len(grid)
        if X is not None:
            check_complex_matrix(X, self.n_features_in_)
        return self

    def transform(self, X):
        """Map rows of grid values to rows of spectral coefficients."""
        check_is_fitted(self, "basis_")
        X = check_complex_matrix(X, self.n_features_in_)
        return self._forward(X)

    def inverse_transform(self, A):
        """Map rows of spectral coefficients back to grid values."""
        check_is_fitted(self, "basis_")
        A = check_complex_matrix(A, len(self.spectrum_), name="A")
        return A @ self.basis_.T


class AntisymmetricDiscreteTransform(_DiscreteTransformBase):
    """Forward/inverse discrete transform in the antisymmetric basis.

    Coefficients are a_m = n! sum_s f(s) conj(E~-_m(s)) over the strictly
    ordered grid; the basis is orthonormal under that pairing, so
    ``inverse_transform(transform(X)) == X`` to rounding.
    """

    _symmetry = "anti"

    def _forward(self, X):
        return math.factorial(int(self.n)) * (X @ np.conj(self.basis_))


class SymmetricDiscreteTransform(_DiscreteTransformBase):
    """Forward/inverse discrete transform in the symmetric basis.

    Grid points and spectrum keys with tied entries carry stabilizer weights:
    a_m = (n!/|S_m|) sum_s |S_s|^(-1) f(s) conj(E~+_m(s)).
    """

    _symmetry = "sym"

    def fit(self, X=None, y=None):
        super().fit(X, y)
        self.point_weights_ = np.array(
            [stabilizer_order(k) for k in self.grid_.numerators], dtype=float
        )
        self.key_weights_ = np.array(
            [stabilizer_order(m) for m in self.spectrum_.tuples], dtype=float
        )
        return self

    def _forward(self, X):
        scaled = X / self.point_weights_
        coeffs = math.factorial(int(self.n)) * (scaled @ np.conj(self.basis_))
        return coeffs / self.key_weights_


class TorusSeriesTransform(TransformerMixin, BaseEstimator):
    """Fourier-series analysis on the unit torus in the E+/- basis.

    Each row of X holds samples of a band-limited function on the flattened
    tensor grid (axes varying last-fastest, as produced by
    ``TorusGrid.points()``); ``transform`` returns the coefficients over all
    canonical integer weights with entries in [0, max_entry].
    """

    def __init__(self, symmetry="sym", n=2, max_entry=3, points_per_axis=None):
        self.symmetry = symmetry
        self.n = n
        self.max_entry = max_entry
        self.points_per_axis = points_per_axis

    def fit(self, X=None, y=None):
        n = int(self.n)
        m = self.points_per_axis
        if m is None:
            m = 2 * int(self.max_entry) + 2
        self.grid_ = TorusGrid(int(m), n)
        self.spectrum_ = integer_spectrum(n, int(self.max_entry), self.symmetry)
        pts = self.grid_.points()
        self.basis_ = np.stack(
            [ExpFunction(key, self.symmetry).on_points(pts) for key in self.spectrum_],
            axis=-1,
        )
        weights = np.array([stabilizer_order(k) for k in self.spectrum_], dtype=float)
        self.key_weights_ = weights if self.symmetry == "sym" else np.ones_like(weights)
        self.n_features_in_ = self.grid_.size
        if X is not None:
            check_complex_matrix(X, self.n_features_in_)
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        X = check_complex_matrix(X, self.n_features_in_)
        scale = self.grid_.weight / math.factorial(int(self.n))
        return scale * (X @ np.conj(self.basis_)) / self.key_weights_

    def inverse_transform(self, A):
        check_is_fitted(self, "basis_")
        A = check_complex_matrix(A, len(self.spectrum_), name="A")
        return A @ self.basis_.T
