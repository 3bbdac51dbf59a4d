"""
================
THOMPSON K-MEANS
================

Lloyd-style alternation under the Thompson metric, with IMR midranges as centroids:

1. initialize (random labels, random data points, K-means++ seeds, or explicit centroids);
2. compute the IMR centroid of every cluster;
3. reassign every point to its nearest centroid in d∞ (ties: lowest cluster id);
4. repeat 2-3 until the labels no longer change or the round cap is reached.

A cluster left empty is reseeded with the point lying farthest from its own centroid.
The alternation is not known to decrease any objective, so termination rests on the round cap.
"""


from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.midrange.imr import ImrConfig, inductive_midrange
from spdmidrange.core.spd.matrix import SpdMatrix
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdValidationError
from spdmidrange.core.util.parallel import ordered_map
from spdmidrange.core.util.rng import make_stream

from .init import InitStrategy, check_k, kmeans_pp_init, random_labels_init, random_points_init
from .model import ClusterModel

if TYPE_CHECKING:
    from spdmidrange.core.util.rng import RandomStream

    from .dataset import Dataset


def imr_centroid(data: Dataset, indices: Sequence[int], imr_iters: int | None = None) -> SpdMatrix:
    """IMR of the points at `indices`, started from the first of them."""
    centroid, _ = inductive_midrange(data.subset(indices),
                                     ImrConfig(num_iters=imr_iters or SpdConfig.CLUSTER_IMR_ITERS, init=0))
    return centroid


def assign_to_nearest(data: Dataset, centroids: Sequence[SpdMatrix]) -> list[int]:
    """Index of the d∞-nearest centroid for every point; ties go to the lowest centroid index."""
    dists: np.ndarray = np.stack(ordered_map(lambda mu: thompson_distances(mu, data.stack), list(centroids)))
    return np.argmin(dists, axis=0).tolist()


def _groups(labels: Sequence[int], k: int) -> list[list[int]]:
    groups: list[list[int]] = [[] for _ in range(k)]
    for i, label in enumerate(labels):
        groups[label].append(i)
    return groups


def _update_centroids(data: Dataset, labels: list[int], k: int,
                      imr_iters: int) -> tuple[list[int], list[SpdMatrix]]:
    """Centroids for `labels`, after reseeding any empty cluster."""
    groups: list[list[int]] = _groups(labels, k)
    centroids: list[SpdMatrix | None] = ordered_map(lambda idx: imr_centroid(data, idx, imr_iters) if idx else None,
                                                    groups)

    for j in (j for j, idx in enumerate(groups) if not idx):
        # distance of every point to its own centroid; singleton clusters cannot donate
        own: np.ndarray = np.full(len(data), -np.inf)
        for mu, idx in zip(centroids, groups):
            if len(idx) > 1:
                own[idx] = thompson_distances(mu, data.subset(idx).stack)

        i: int = int(np.argmax(own))
        donor: int = labels[i]
        logger.warning(f'K-means: cluster {j} empty, reseeded with point {i} taken from cluster {donor}')

        labels[i] = j
        groups[donor].remove(i)
        groups[j] = [i]
        centroids[j] = data[i]
        centroids[donor] = imr_centroid(data, groups[donor], imr_iters)

    return labels, centroids


def kmeans(data: Dataset, k: int,
           init: InitStrategy | str | Sequence[SpdMatrix] = InitStrategy.RANDOM_POINTS,
           max_rounds: int | None = None, imr_iters: int | None = None,
           rng: RandomStream | None = None) -> ClusterModel:
    """Cluster `data` into `k` clusters by Thompson K-means with IMR centroids."""
    check_k(data, k)
    max_rounds: int = max_rounds or SpdConfig.KMEANS_MAX_ROUNDS
    imr_iters: int = imr_iters or SpdConfig.CLUSTER_IMR_ITERS
    rng: RandomStream = rng or make_stream()

    if isinstance(init, (str, InitStrategy)):
        match InitStrategy(init):
            case InitStrategy.RANDOM_LABELS:
                labels: list[int] = random_labels_init(data, k, rng)
            case InitStrategy.RANDOM_POINTS:
                labels: list[int] = assign_to_nearest(data, random_points_init(data, k, rng))
            case InitStrategy.KMEANS_PP:
                labels: list[int] = assign_to_nearest(data, kmeans_pp_init(data, k, rng))
    else:
        if len(init) != k:
            raise SpdValidationError(f'*** {len(init)} INITIAL CENTROIDS GIVEN FOR k = {k} ***')
        labels: list[int] = assign_to_nearest(data, init)

    converged: bool = False
    rounds: int = 0
    for rounds in range(1, max_rounds + 1):
        labels, centroids = _update_centroids(data, labels, k, imr_iters)
        new_labels: list[int] = assign_to_nearest(data, centroids)

        changed: int = sum(a != b for a, b in zip(labels, new_labels))
        logger.debug(f'K-means round #{rounds}: {changed} label(s) changed')
        if not changed:
            converged = True
            break
        labels = new_labels

    if not converged:
        logger.warning(f'K-means: labels still changing after {max_rounds} rounds')
        labels, centroids = _update_centroids(data, labels, k, imr_iters)

    return ClusterModel(centroids=centroids, assignment=labels, rounds=rounds, converged=converged)
