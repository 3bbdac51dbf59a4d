"""
=========================
CLUSTERING INITIALIZATION
=========================

Ways of starting Thompson K-means:

- `RANDOM_LABELS`: every point gets a uniformly random cluster label;
- `RANDOM_POINTS`: k distinct data points, drawn uniformly, become the initial centroids;
- `KMEANS_PP`: K-means++ seeding under d∞ (`kmeans_pp_init(...)`).
"""


from __future__ import annotations

from enum import StrEnum, auto
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.errors import KTooLarge, SpdValidationError

if TYPE_CHECKING:
    from spdmidrange.core.spd.matrix import SpdMatrix
    from spdmidrange.core.util.rng import RandomStream

    from .dataset import Dataset


class InitStrategy(StrEnum):
    """K-means initialization strategies."""

    RANDOM_LABELS: str = auto()

    RANDOM_POINTS: str = auto()

    KMEANS_PP: str = auto()


def check_k(data: Dataset, k: int):
    if k < 1:
        raise SpdValidationError(f'*** NUMBER OF CLUSTERS MUST BE POSITIVE, GOT {k} ***')
    if k > len(data.require_nonempty()):
        raise KTooLarge(f'*** k = {k} EXCEEDS DATASET SIZE {len(data)} ***')


_COINCIDENT: float = 1e-12


def _squared_distances(center: SpdMatrix, data: Dataset) -> np.ndarray:
    dists: np.ndarray = thompson_distances(center, data.stack)
    # numerically coincident points carry no weight
    return np.where(dists < _COINCIDENT, 0.0, dists) ** 2


def kmeans_pp_indices(data: Dataset, k: int, rng: RandomStream) -> list[int]:
    """Indices of K-means++ seeds: the first uniform, each next one drawn ∝ squared d∞ to the nearest seed."""
    check_k(data, k)
    n: int = len(data)

    chosen: list[int] = [int(rng.integers(n))]
    nearest_sq: np.ndarray = _squared_distances(data[chosen[0]], data)

    while len(chosen) < k:
        weights: np.ndarray = nearest_sq.copy()
        weights[chosen] = 0.0
        total: float = float(weights.sum())

        if total > 0:
            i: int = int(rng.choice(n, p=weights / total))
        else:
            # only duplicates of chosen seeds remain
            logger.debug(f'K-means++: no positive weight left after {len(chosen)} seeds, drawing uniformly')
            i: int = int(rng.choice(np.setdiff1d(np.arange(n), chosen)))

        chosen.append(i)
        nearest_sq = np.minimum(nearest_sq, _squared_distances(data[i], data))

    return chosen


def kmeans_pp_init(data: Dataset, k: int, rng: RandomStream) -> list[SpdMatrix]:
    """Return k distinct data points chosen by K-means++ seeding."""
    return [data[i] for i in kmeans_pp_indices(data, k, rng)]


def random_points_init(data: Dataset, k: int, rng: RandomStream) -> list[SpdMatrix]:
    """Return k distinct data points drawn uniformly without replacement."""
    check_k(data, k)
    return [data[int(i)] for i in rng.choice(len(data), size=k, replace=False)]


def random_labels_init(data: Dataset, k: int, rng: RandomStream) -> list[int]:
    """Return a uniformly random label in [0, k) for every point."""
    check_k(data, k)
    return rng.integers(k, size=len(data)).tolist()
