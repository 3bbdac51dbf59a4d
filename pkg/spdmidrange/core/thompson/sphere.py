"""
===================
THOMPSON d∞-SPHERES
===================

Random points at a prescribed Thompson distance from a center.

A random symmetric direction S (independent standard normals on and above the diagonal) gives
P = exp(S), spread nearly radially symmetrically around the identity. Because the Nussbaum
geodesic is parameterized proportionally to Thompson distance, retracting (or extending) along
the geodesic from I toward P by the factor radius / d∞(I, P) lands exactly on the sphere of
the requested radius around I. The congruence Σ ↦ C^(1/2) Σ C^(1/2) then carries the point to
the sphere around the center C, d∞ being invariant under congruences.
"""


from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.spd.linalg import matrix_exp, matrix_power, sym_eig
from spdmidrange.core.spd.matrix import SpdMatrix, make_spd
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import DegenerateDirection, SpdValidationError

from .geodesic import nussbaum_point
from .metric import congruence

if TYPE_CHECKING:
    from spdmidrange.core.util.rng import RandomStream


@dataclass(frozen=True)
class SphereSample:
    """A point drawn on the d∞-sphere of given radius around a center."""

    center: SpdMatrix
    radius: float
    point: SpdMatrix


def random_symmetric_direction(dim: int, rng: RandomStream) -> np.ndarray:
    """Symmetric matrix with independent standard-normal entries on and above the diagonal."""
    g: np.ndarray = rng.standard_normal((dim, dim))
    upper: np.ndarray = np.triu(g)
    return upper + np.triu(g, k=1).T


def sphere_sample(center: SpdMatrix, radius: float, rng: RandomStream) -> SphereSample:
    """Draw a point at Thompson distance `radius` from `center`.

    Directions whose eigenvalues all coincide (pure dilations, the only option when d = 1)
    are redrawn up to `SpdConfig.SPHERE_MAX_ATTEMPTS` times before `DegenerateDirection` is raised.
    """
    if not radius > 0:
        raise SpdValidationError(f'*** SPHERE RADIUS {radius} IS NOT POSITIVE ***')

    identity: SpdMatrix = make_spd(np.eye(center.dim))

    for attempt in range(SpdConfig.SPHERE_MAX_ATTEMPTS):
        direction: np.ndarray = random_symmetric_direction(center.dim, rng)
        s_min, s_max = (float(v) for v in sym_eig(direction)[0][[0, -1]])

        if s_max - s_min <= 1e-12 * max(1.0, abs(s_min), abs(s_max)):
            logger.debug(f'Sphere sampling: degenerate direction on attempt #{attempt + 1}, redrawing')
            continue

        # d∞(I, exp(S)) = max |s_i|
        r0: float = max(abs(s_min), abs(s_max))
        sigma: SpdMatrix = nussbaum_point(identity, matrix_exp(direction), np.exp(s_min), np.exp(s_max), radius / r0)

        return SphereSample(center=center, radius=radius, point=congruence(sigma, matrix_power(center, 0.5).entries))

    raise DegenerateDirection(f'*** NO NON-DEGENERATE DIRECTION IN {SpdConfig.SPHERE_MAX_ATTEMPTS} ATTEMPTS '
                              f'(DIMENSION {center.dim}) ***')
