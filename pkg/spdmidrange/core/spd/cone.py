"""Cone projection of 2x2 SPD matrices into R^3 for visualization."""


from math import sqrt

from spdmidrange.core.util.errors import WrongDimension

from .matrix import SpdMatrix


type ConePoint = tuple[float, float, float]

_SQRT2: float = sqrt(2)
_HALF_SQRT2: float = _SQRT2 / 2  # exact halving: 2 · _HALF_SQRT2 == _SQRT2


def cone_projection(a: SpdMatrix) -> ConePoint:
    """Map [[a, b], [b, c]] to (√2 b, (a - c)/√2, (a + c)/√2), inside the cone z > √(x² + y²)."""
    if a.dim != 2:
        raise WrongDimension(f'*** CONE PROJECTION NEEDS A 2x2 MATRIX, GOT {a.dim}x{a.dim} ***')

    (p, q), (_, r) = a.entries.tolist()
    return _SQRT2 * q, (p - r) * _HALF_SQRT2, (p + r) * _HALF_SQRT2
