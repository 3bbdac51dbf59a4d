"""
==========================
CLUSTERING ACCURACY TABLES
==========================

X-means and K-means++ accuracy on synthetic clustered data (K_true well-separated centers,
points on d∞-spheres around them), over `runs` independent datasets per matrix dimension.
X-means scores splits with the MANIFOLD likelihood unless told otherwise.
"""


from __future__ import annotations

from collections.abc import Callable, Sequence
from functools import partial
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.clustering.accuracy import AccuracyReport, score_accuracy
from spdmidrange.core.clustering.bic import BicLikelihood
from spdmidrange.core.clustering.init import InitStrategy
from spdmidrange.core.clustering.kmeans import kmeans
from spdmidrange.core.clustering.xmeans import xmeans
from spdmidrange.core.util.parallel import ordered_map
from spdmidrange.core.util.rng import run_stream

from .generators import gen_clustered_dataset
from .tables import CsvTable, seed_comment

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset
    from spdmidrange.core.clustering.model import ClusterModel
    from spdmidrange.core.util.rng import RandomStream

    from .generators import ExperimentConfig


type Clusterer = Callable[[Dataset, int, RandomStream], ClusterModel]


XMEANS_DIMS: tuple[int, ...] = (2, 5, 10, 20)
KMEANSPP_DIMS: tuple[int, ...] = (2, 5, 10, 20, 100)


def run_xmeans(data: Dataset, _n_clusters: int, rng: RandomStream,
               likelihood: BicLikelihood = BicLikelihood.MANIFOLD) -> ClusterModel:
    # the number of clusters is discovered, not given
    return xmeans(data, k0=1, rng=rng, likelihood=likelihood)


def run_kmeanspp(data: Dataset, n_clusters: int, rng: RandomStream) -> ClusterModel:
    return kmeans(data, n_clusters, init=InitStrategy.KMEANS_PP, rng=rng)


def accuracy_table(name: str, clusterer: Clusterer, cfg: ExperimentConfig, dims: Sequence[int],
                   progress: bool = False, **details) -> str:
    """CSV of per-run accuracy and per-dimension means; `details` go into the seed comment."""
    jobs: list[tuple[int, int, int]] = [(c, dim, run) for c, dim in enumerate(dims) for run in range(cfg.runs)]

    def one_run(job: tuple[int, int, int]) -> tuple[AccuracyReport, int]:
        c, dim, run = job
        rng: RandomStream = run_stream(cfg.seed, c, run)
        data: Dataset = gen_clustered_dataset(cfg.model_copy(update={'dim': dim}), rng)
        model: ClusterModel = clusterer(data, cfg.n_clusters, rng)
        return score_accuracy(model, data.labels), model.k

    results: list[tuple[AccuracyReport, int]] = ordered_map(one_run, jobs, desc=f'{name} runs', progress=progress)

    table = CsvTable(columns=('d', 'run', 'points_identified', 'clusters_identified', 'clusters_lost', 'k_found'),
                     comments=[seed_comment(name, cfg.seed, n_points=cfg.n_points, n_clusters=cfg.n_clusters,
                                            cluster_radius=cfg.cluster_radius,
                                            min_center_separation=cfg.min_center_separation, runs=cfg.runs,
                                            **details),
                               f'counts: points of {cfg.n_points}, clusters of {cfg.n_clusters}'])

    for c, dim in enumerate(dims):
        per_run: list[tuple[AccuracyReport, int]] = results[c * cfg.runs:(c + 1) * cfg.runs]
        table.extend((dim, run, report.points_identified, report.clusters_identified, report.clusters_lost, k)
                     for run, (report, k) in enumerate(per_run))

        means: np.ndarray = np.mean([(r.points_identified, r.clusters_identified, r.clusters_lost, k)
                                     for r, k in per_run], axis=0)
        table.add(dim, 'mean', *(float(m) for m in means))
        logger.info(f'{name} (d={dim}): mean {means[0]:.1f} points / {means[1]:.1f} clusters identified, '
                    f'{means[2]:.1f} lost')

    return table.render()


def experiment_xmeans(cfg: ExperimentConfig, dims: Sequence[int] = XMEANS_DIMS, progress: bool = False,
                      likelihood: BicLikelihood | str = BicLikelihood.MANIFOLD) -> str:
    likelihood: BicLikelihood = BicLikelihood(likelihood)
    return accuracy_table('xmeans', partial(run_xmeans, likelihood=likelihood), cfg, dims, progress=progress,
                          likelihood=likelihood.value)


def experiment_kmeanspp(cfg: ExperimentConfig, dims: Sequence[int] = KMEANSPP_DIMS, progress: bool = False) -> str:
    return accuracy_table('kmeanspp', run_kmeanspp, cfg, dims, progress=progress)
