"""
==========================
RANDOM SPD DATA GENERATION
==========================

Random SPD matrices by the transpose-product method, G G.T with standard-normal G,
and synthetic clustered datasets: K_true well-separated centers (rejection-sampled so that all
pairwise Thompson distances reach `min_center_separation`), each surrounded by points drawn on
the d∞-sphere of radius `cluster_radius`.
"""


from __future__ import annotations

from typing import Self, TYPE_CHECKING

from loguru import logger
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat, PositiveInt, model_validator

from spdmidrange.core.clustering.dataset import Dataset
from spdmidrange.core.spd.matrix import SpdMatrix, make_spd
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.thompson.sphere import sphere_sample
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import CenterSamplingExhausted

if TYPE_CHECKING:
    from spdmidrange.core.util.rng import RandomStream


# ridge added to G G.T, relative to its mean eigenvalue
_RIDGE: float = 1e-8


class ExperimentConfig(BaseModel):
    """Validated parameters shared by data generation and the experiment suites."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    seed: NonNegativeInt = Field(default_factory=lambda: SpdConfig.DEFAULT_SEED)

    dim: PositiveInt = 2

    n_points: PositiveInt = 200

    n_clusters: PositiveInt = 10

    cluster_radius: PositiveFloat = 0.2

    min_center_separation: PositiveFloat = 1.0

    num_iters: PositiveInt = Field(default_factory=lambda: SpdConfig.IMR_NUM_ITERS)

    runs: PositiveInt = 20

    @model_validator(mode='after')
    def check_well_posed(self) -> Self:
        if not self.cluster_radius < self.min_center_separation / 2:
            raise ValueError(f'cluster_radius {self.cluster_radius} must be below half of '
                             f'min_center_separation {self.min_center_separation}')
        if self.n_clusters > self.n_points:
            raise ValueError(f'n_clusters {self.n_clusters} exceeds n_points {self.n_points}')
        return self


def gen_random_spd(dim: int, rng: RandomStream) -> SpdMatrix:
    """Return G G.T + ε I with G standard normal and ε = 1e-8 · trace(G G.T) / dim."""
    g: np.ndarray = rng.standard_normal((dim, dim))
    m: np.ndarray = g @ g.T
    return make_spd(m + _RIDGE * np.trace(m) / dim * np.eye(dim))


def gen_random_dataset(dim: int, n_points: int, rng: RandomStream) -> Dataset:
    return Dataset.of(gen_random_spd(dim, rng) for _ in range(n_points))


def gen_cluster_centers(cfg: ExperimentConfig, rng: RandomStream) -> list[SpdMatrix]:
    """Rejection-sample `cfg.n_clusters` centers with pairwise d∞ ≥ `cfg.min_center_separation`."""
    centers: list[SpdMatrix] = [gen_random_spd(cfg.dim, rng)]
    # best minimum distance reached by a rejected candidate
    best_rejected: float = 0.0

    attempts: int = 1
    while len(centers) < cfg.n_clusters:
        if attempts >= SpdConfig.CENTER_MAX_ATTEMPTS:
            raise CenterSamplingExhausted(f'*** ONLY {len(centers)} OF {cfg.n_clusters} CENTERS AT SEPARATION '
                                          f'{cfg.min_center_separation} AFTER {attempts} ATTEMPTS '
                                          f'(BEST REJECTED CANDIDATE REACHED {best_rejected:.4f}) ***',
                                          achieved_separation=best_rejected)

        candidate: SpdMatrix = gen_random_spd(cfg.dim, rng)
        attempts += 1

        nearest: float = float(np.min(thompson_distances(candidate, centers)))
        if nearest >= cfg.min_center_separation:
            centers.append(candidate)
        else:
            best_rejected = max(best_rejected, nearest)

    logger.debug(f'{cfg.n_clusters} cluster centers (d = {cfg.dim}) sampled in {attempts} attempts')
    return centers


def cluster_sizes(n_points: int, n_clusters: int) -> list[int]:
    """Even partition of n_points; the first n_points % n_clusters clusters get one extra point."""
    base, extra = divmod(n_points, n_clusters)
    return [base + (c < extra) for c in range(n_clusters)]


def gen_clustered_dataset(cfg: ExperimentConfig, rng: RandomStream) -> Dataset:
    """Return a labelled dataset of points on d∞-spheres of radius `cfg.cluster_radius` around separated centers.

    Points are grouped by cluster, in center order.
    """
    centers: list[SpdMatrix] = gen_cluster_centers(cfg, rng)

    points: list[SpdMatrix] = []
    labels: list[int] = []
    for c, (center, size) in enumerate(zip(centers, cluster_sizes(cfg.n_points, cfg.n_clusters))):
        points.extend(sphere_sample(center, cfg.cluster_radius, rng).point for _ in range(size))
        labels.extend([c] * size)

    return Dataset.of(points, labels)
