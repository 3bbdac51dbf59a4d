"""
===============
THOMPSON METRIC
===============

d∞(A, B) = log max{λ_max(A inv(B)), λ_max(B inv(A))} = max_i |log λ_i(B inv(A))|,
evaluated from the extremal generalized eigenvalues only.
Congruences A ↦ G A G.T are isometries of d∞.
"""


from __future__ import annotations

from collections.abc import Sequence
from math import log

import numpy as np

from spdmidrange.core.spd.linalg import check_same_dim, gen_extremal_eig, gen_extremal_eig_batch
from spdmidrange.core.spd.matrix import Matrix, SpdMatrix, make_spd
from spdmidrange.core.util.errors import NotPositiveDefinite, SingularTransform


def distance_from_extremes(lam_min: float | np.ndarray, lam_max: float | np.ndarray) -> float | np.ndarray:
    """Thompson distance from the extremal generalized eigenvalues of a pencil."""
    return np.maximum(np.maximum(np.log(lam_max), -np.log(lam_min)), 0.0)


def thompson_distance(a: SpdMatrix, b: SpdMatrix) -> float:
    """Return d∞(A, B).

    The pencil is always whitened by the same one of the two arguments
    (a fixed order on their entries), so d∞(A, B) and d∞(B, A) are bit-identical.
    """
    check_same_dim(a, b)
    if a is b:
        return 0.0
    if a.entries.tobytes() > b.entries.tobytes():
        a, b = b, a

    pair = gen_extremal_eig(a, b)
    return float(max(log(pair.lambda_max), -log(pair.lambda_min), 0.0))


def thompson_distances(x: SpdMatrix, points: Sequence[SpdMatrix] | Matrix) -> np.ndarray:
    """Return d∞(X, Y_i) for every Y_i, with one whitening by X for the whole batch."""
    stack: Matrix = points if isinstance(points, np.ndarray) else np.stack([p.entries for p in points])
    lam_min, lam_max = gen_extremal_eig_batch(x, stack)
    return distance_from_extremes(lam_min, lam_max)


def congruence(a: SpdMatrix, g: Matrix) -> SpdMatrix:
    """Return G A G.T for invertible G."""
    g_arr: Matrix = np.asarray(g, dtype=float)
    if g_arr.shape != (a.dim, a.dim):
        raise SingularTransform(f'*** TRANSFORM OF SHAPE {g_arr.shape} CANNOT ACT ON {a.dim}x{a.dim} MATRICES ***')

    # G invertible iff G G.T is positive definite
    try:
        make_spd(g_arr @ g_arr.T)
    except NotPositiveDefinite as err:
        raise SingularTransform('*** CONGRUENCE TRANSFORM IS SINGULAR ***') from err

    m: Matrix = g_arr @ a.entries @ g_arr.T
    return make_spd((m + m.T) / 2)
