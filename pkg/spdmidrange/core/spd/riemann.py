"""
========================================
AFFINE-INVARIANT RIEMANNIAN CROSS-CHECKS
========================================

The affine-invariant Riemannian distance d2 and geodesic A #_t B.
Used as reference points for the Thompson geometry
(e.g. the Thompson midpoint coincides with the geometric mean A #_1/2 B when d = 2).
"""


from __future__ import annotations

import numpy as np

from spdmidrange.core.util.errors import InvalidGeodesicWeight

from .linalg import check_same_dim, spectral_map, gen_eig, matrix_power
from .matrix import SpdMatrix, make_spd


def riemannian_distance(a: SpdMatrix, b: SpdMatrix) -> float:
    """Return d2(A, B) = (Σ log² λ_i)^(1/2) over the generalized spectrum of B @ inv(A)."""
    return float(np.sqrt(np.sum(np.log(gen_eig(a, b)) ** 2)))


def riemannian_geodesic(a: SpdMatrix, b: SpdMatrix, t: float) -> SpdMatrix:
    """Return A #_t B = A^(1/2) (A^(-1/2) B A^(-1/2))^t A^(1/2)."""
    check_same_dim(a, b)
    if not 0 <= t <= 1:
        raise InvalidGeodesicWeight(f'*** GEODESIC WEIGHT {t} IS OUTSIDE [0, 1] ***')
    if t == 0:
        return a
    if t == 1:
        return b

    a_half: np.ndarray = matrix_power(a, 0.5).entries
    a_neg_half: np.ndarray = matrix_power(a, -0.5).entries
    inner: np.ndarray = spectral_map(a_neg_half @ b.entries @ a_neg_half, lambda eigvals: np.exp(t * np.log(eigvals)))
    m: np.ndarray = a_half @ inner @ a_half
    return make_spd((m + m.T) / 2)
