"""Exception and warning types shared across the library."""


class SizeLimitError(ValueError):
    """Requested combinatorial size exceeds the supported range."""


class DegenerateWeightError(ValueError):
    """A strictly dominant weight was required but entries repeat."""


class ShapeError(ValueError):
    """Mismatched lengths between weights, points, or sampled values."""


class DominanceError(ValueError):
    """A spectrum key does not satisfy the required dominance class."""


class SymmetryError(ValueError):
    """A field does not have the symmetry class it was declared with."""


class EmptyGridError(ValueError):
    """Ordered-grid parameters admit no points."""


class RangeError(ValueError):
    """Scalar argument outside the supported range."""


class TruncationWarning(UserWarning):
    """Integration box too small for the requested accuracy."""
