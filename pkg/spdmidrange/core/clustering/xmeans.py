"""
================
THOMPSON X-MEANS
================

K-means that discovers the number of clusters by repeated binary splits.

Starting from K-means at `k0`, every cluster L is tentatively split in two: the split seeds are
a random point on the d∞-sphere of radius `split_radius_factor · σ̂_L` around the centroid μ_L
(σ̂_L: root-mean-square d∞ of the members to μ_L) and its antipode through μ_L; 2-means on the
members alone then yields the candidate children. A split is kept iff it raises the cluster's BIC
and leaves both children with at least two points. After each pass the whole dataset is
re-clustered from the enlarged centroid list, and passes continue while some split is accepted.

A cluster whose split was rejected `max_splits_per_cluster` times is no longer tried.
"""


from __future__ import annotations

from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.thompson.geodesic import geodesic_antipode
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.thompson.sphere import sphere_sample
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdValidationError
from spdmidrange.core.util.rng import make_stream

from .bic import BicLikelihood, bic_score
from .init import InitStrategy
from .kmeans import kmeans

if TYPE_CHECKING:
    from spdmidrange.core.spd.matrix import SpdMatrix
    from spdmidrange.core.util.rng import RandomStream

    from .dataset import Dataset
    from .model import ClusterModel


_MIN_CHILD_SIZE: int = 2


def _try_split(cluster: Dataset, centroid: SpdMatrix, split_radius_factor: float,
               likelihood: BicLikelihood, imr_iters: int, max_rounds: int,
               rng: RandomStream) -> list[SpdMatrix] | None:
    """Return the two child centroids if splitting `cluster` raises its BIC, else None."""
    if len(cluster) < 2 * _MIN_CHILD_SIZE:
        return None

    spread: float = float(np.sqrt(np.mean(thompson_distances(centroid, cluster.stack) ** 2)))
    if spread == 0:
        return None

    seed: SpdMatrix = sphere_sample(centroid, split_radius_factor * spread, rng).point
    children: ClusterModel = kmeans(cluster, 2, init=[seed, geodesic_antipode(centroid, seed)],
                                    max_rounds=max_rounds, imr_iters=imr_iters, rng=rng)

    sizes: list[int] = [len(idx) for idx in children.clusters()]
    if min(sizes) < _MIN_CHILD_SIZE:
        logger.debug(f'X-means: split into {sizes} rejected (child too small)')
        return None

    unsplit = bic_score(cluster, [0] * len(cluster), [centroid], likelihood)
    split = bic_score(cluster, children.assignment, children.centroids, likelihood)
    logger.debug(f'X-means: {len(cluster)} points, BIC unsplit {unsplit.value:.3f} vs split {split.value:.3f} {sizes}')

    # a zero-variance split scores +inf and wins against any finite unsplit score
    if not split > unsplit:
        return None
    return children.centroids


def xmeans(data: Dataset, k0: int = 1, max_splits_per_cluster: int | None = None,
           split_radius_factor: float | None = None, rng: RandomStream | None = None, *,
           likelihood: BicLikelihood | str = BicLikelihood.SCALAR,
           imr_iters: int | None = None, max_rounds: int | None = None) -> ClusterModel:
    """Cluster `data` by X-means with BIC-scored binary splits, starting from `k0` clusters."""
    if k0 < 1:
        raise SpdValidationError(f'*** X-MEANS NEEDS k0 >= 1, GOT {k0} ***')

    max_splits: int = max_splits_per_cluster or SpdConfig.XMEANS_MAX_SPLITS
    factor: float = split_radius_factor or SpdConfig.XMEANS_SPLIT_RADIUS_FACTOR
    likelihood: BicLikelihood = BicLikelihood(likelihood)
    imr_iters: int = imr_iters or SpdConfig.CLUSTER_IMR_ITERS
    max_rounds: int = max_rounds or SpdConfig.KMEANS_MAX_ROUNDS
    rng: RandomStream = rng or make_stream()
    if not factor > 0:
        raise SpdValidationError(f'*** SPLIT RADIUS FACTOR {factor} IS NOT POSITIVE ***')

    model: ClusterModel = kmeans(data, k0, init=InitStrategy.RANDOM_POINTS,
                                 max_rounds=max_rounds, imr_iters=imr_iters, rng=rng)
    # rejected split attempts per cluster id
    rejections: list[int] = [0] * model.k

    while True:
        centroids: list[SpdMatrix] = []
        next_rejections: list[int] = []

        for j, members in enumerate(model.clusters()):
            mu: SpdMatrix = model.centroids[j]
            children: list[SpdMatrix] | None = None
            if rejections[j] < max_splits:
                children = _try_split(data.subset(members), mu, factor, likelihood, imr_iters, max_rounds, rng)

            if children:
                centroids.extend(children)
                next_rejections.extend([0, 0])
            else:
                centroids.append(mu)
                next_rejections.append(rejections[j] + (rejections[j] < max_splits))

        if len(centroids) == model.k:
            break

        logger.info(f'X-means: {len(centroids) - model.k} split(s) accepted, now k = {len(centroids)}')
        # cluster ids follow the order of the initial centroids, so rejection counts stay aligned
        model = kmeans(data, len(centroids), init=centroids, max_rounds=max_rounds, imr_iters=imr_iters, rng=rng)
        rejections = next_rejections

    model.bic = bic_score(data, model.assignment, model.centroids, likelihood).value
    return model
