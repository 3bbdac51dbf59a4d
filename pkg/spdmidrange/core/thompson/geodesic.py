"""
===============================================
NUSSBAUM GEODESIC / WEIGHTED GEOMETRIC MIDRANGE
===============================================

The Thompson metric has infinitely many geodesics between two points;
`spdmidrange` uses the closed-form family built from the extremal generalized eigenvalues
(λ_m, λ_M) of B inv(A) only:

    A *_t B = ((λ_M^t - λ_m^t) B + (λ_M λ_m^t - λ_m λ_M^t) A) / (λ_M - λ_m)     if λ_M ≠ λ_m
    A *_t B = λ_m^t A                                                           otherwise

The curve is parameterized proportionally to Thompson distance, d∞(A, A *_t B) = |t| d∞(A, B),
and stays inside the cone for every real t; public entry points restrict t to [0, 1],
while sphere sampling and antipodes use the extension through `nussbaum_point(...)`.
"""


from __future__ import annotations

from dataclasses import dataclass
from math import exp, log

from spdmidrange.core.spd.linalg import check_same_dim, gen_extremal_eig
from spdmidrange.core.spd.matrix import Matrix, SpdMatrix, make_spd
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import InvalidGeodesicWeight


@dataclass(frozen=True)
class GeodesicWeight:
    """Interpolation parameter t in [0, 1]."""

    t: float

    def __post_init__(self):
        if not 0 <= self.t <= 1:
            raise InvalidGeodesicWeight(f'*** GEODESIC WEIGHT {self.t} IS OUTSIDE [0, 1] ***')

    @classmethod
    def of(cls, t: GeodesicWeight | float, /) -> GeodesicWeight:
        return t if isinstance(t, GeodesicWeight) else cls(t=float(t))


def nussbaum_point(a: SpdMatrix, b: SpdMatrix, lam_min: float, lam_max: float, t: float) -> SpdMatrix:
    """Point at any real parameter t on the geodesic from A to B, given the pencil's extremal eigenvalues."""
    # powers in log-space so ill-conditioned pencils do not overflow
    pow_min: float = exp(t * log(lam_min))

    gap: float = lam_max - lam_min
    if gap <= SpdConfig.DEGENERACY_REL_GAP * lam_max:
        return make_spd(pow_min * a.entries)

    pow_max: float = exp(t * log(lam_max))
    m: Matrix = ((pow_max - pow_min) / gap) * b.entries + ((lam_max * pow_min - lam_min * pow_max) / gap) * a.entries
    return make_spd(m)


def thompson_geodesic(a: SpdMatrix, b: SpdMatrix, t: GeodesicWeight | float) -> SpdMatrix:
    """Return A *_t B, the weighted geometric midrange of A and B with weight t in [0, 1]."""
    check_same_dim(a, b)
    weight: float = GeodesicWeight.of(t).t

    if weight == 0:
        return a
    if weight == 1:
        return b

    pair = gen_extremal_eig(a, b)
    return nussbaum_point(a, b, pair.lambda_min, pair.lambda_max, weight)


def geodesic_antipode(center: SpdMatrix, point: SpdMatrix) -> SpdMatrix:
    """Return the point at parameter -1 on the geodesic from `center` through `point`.

    It lies at the same Thompson distance from `center` as `point`.
    """
    check_same_dim(center, point)
    pair = gen_extremal_eig(center, point)
    return nussbaum_point(center, point, pair.lambda_min, pair.lambda_max, -1.0)
