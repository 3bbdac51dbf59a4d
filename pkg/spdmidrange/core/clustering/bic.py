"""
==============================
BAYESIAN INFORMATION CRITERION
==============================

Each cluster L of n_L points around centroid μ_L is modelled as an isotropic density in Thompson
distance with scale σ̂_L estimated by maximum likelihood. With D = d(d+1)/2, the dimension of the
SPD cone, and N the total number of points:

    SCALAR:    σ̂_L² = Σ d∞(Y_i, μ_L)² / n_L
               ll_L = -n_L log σ̂_L - n_L / 2 + n_L log(n_L / N)
    MANIFOLD:  the same with every distance counted once per cone dimension:
               σ̂_L² = Σ d∞(Y_i, μ_L)² / (n_L D),  ll_L = -n_L D log σ̂_L - n_L D / 2 + n_L log(n_L / N)

    BIC = Σ_L ll_L - (p / 2) log N,    p = K (D + 1)  (a centroid and a scale per cluster)

Higher is better. A cluster with σ̂_L = 0 is a degenerate perfect fit: the score is +∞ and flagged.
SCALAR is the default; MANIFOLD keeps the likelihood gain of a genuine split growing with d as fast
as the parameter penalty, which high-dimensional X-means needs.
"""


from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum, auto
from math import inf, log
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.errors import EmptyCluster, LengthMismatch

if TYPE_CHECKING:
    from spdmidrange.core.spd.matrix import SpdMatrix

    from .dataset import Dataset


_COINCIDENT: float = 1e-12  # d∞ below which points count as identical to their centroid


class BicLikelihood(StrEnum):
    """Dimension weighting of the per-cluster likelihood."""

    SCALAR: str = auto()

    MANIFOLD: str = auto()


@dataclass(frozen=True)
class BicScore:
    """BIC value, with a flag for clusters of zero spread."""

    value: float

    zero_variance: bool = False

    def __gt__(self, other: BicScore) -> bool:
        return self.value > other.value


def bic_score(data: Dataset, assignment: Sequence[int], centroids: Sequence[SpdMatrix],
              likelihood: BicLikelihood | str = BicLikelihood.SCALAR) -> BicScore:
    """Score the partition `assignment` of `data` with the given centroids."""
    if len(assignment) != len(data.require_nonempty()):
        raise LengthMismatch(f'*** {len(assignment)} ASSIGNMENTS FOR {len(data)} POINTS ***')

    n_total: int = len(data)
    k: int = len(centroids)
    cone_dim: int = data.dim * (data.dim + 1) // 2
    ll_dim: int = cone_dim if BicLikelihood(likelihood) is BicLikelihood.MANIFOLD else 1

    labels: np.ndarray = np.asarray(assignment)
    clusters: list[list[int]] = [np.flatnonzero(labels == j).tolist() for j in range(k)]
    for j, members in enumerate(clusters):
        if not members:
            raise EmptyCluster(f'*** CLUSTER {j} OF {k} HAS NO MEMBERS ***')

    log_likelihood: float = 0.0
    for j, (mu, members) in enumerate(zip(centroids, clusters)):
        n: int = len(members)
        dists: np.ndarray = thompson_distances(mu, data.subset(members).stack)
        if np.max(dists) < _COINCIDENT:
            logger.warning(f'BIC: cluster {j} has zero variance ({n} coincident point(s)), scoring +inf')
            return BicScore(value=inf, zero_variance=True)

        sigma_sq: float = float(np.sum(dists ** 2)) / (n * ll_dim)
        log_likelihood += -n * ll_dim * 0.5 * log(sigma_sq) - n * ll_dim / 2 + n * log(n / n_total)

    n_params: int = k * (cone_dim + 1)
    return BicScore(value=log_likelihood - n_params / 2 * log(n_total))
