"""Symmetric and antisymmetric multivariate exponential functions, their
Fourier series, integral transforms, and discrete transforms."""

from .diffops import StencilConfig, apply_sigma_k, exp_field, sigma_k_eigenvalue
from .discrete import (
    OrderedGrid,
    SpectrumSet,
    amdft,
    basis_matrix,
    enumerate_ordered,
    eval_discrete,
    ft1d,
    gram_matrix,
    grid_nodes_1d,
    smdft,
)
from .errors import (
    DegenerateWeightError,
    DominanceError,
    EmptyGridError,
    RangeError,
    ShapeError,
    SizeLimitError,
    SymmetryError,
    TruncationWarning,
)
from .estimators import (
    AntisymmetricDiscreteTransform,
    SymmetricDiscreteTransform,
    TorusSeriesTransform,
)
from .expfun import (
    ExpFunction,
    eval_antisym,
    eval_on_points,
    eval_special,
    eval_sym,
    rho_prime_weight,
    rho_weight,
    ryser_permanent,
)
from .fourier_series import (
    CoefficientMap,
    TorusGrid,
    analyze,
    inner_product_fundamental,
    inner_product_torus,
    integer_spectrum,
    plancherel_check,
    sample_on_grid,
    synthesize,
    synthesize_on_points,
)
from .hermite import (
    HermiteGaussianField,
    HermiteIndex,
    TruncationBox,
    eigen_check,
    hermite_det_eval,
    hermite_eval,
    transform_hermite_analytic,
    transform_numeric,
    transform_phase,
)
from .serialize import (
    dump_coefficients,
    dump_samples,
    load_coefficients,
    load_samples,
)
from .symgroup import (
    Permutation,
    Weight,
    classify_dominance,
    dominant_sort,
    enumerate_permutations,
    iter_permutations,
    longest_element,
    reduce_to_affine_fundamental,
    stabilizer_order,
)

__version__ = "0.1.0"
