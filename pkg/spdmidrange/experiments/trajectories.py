"""
======================
TRAJECTORY CONTRACTION
======================

IMR trajectories started from different data points are pulled toward each other.
For one random dataset, the IMR is run from every data point; the table records, at log-spaced
iterations k, the distance d∞(X_k, X_k^ref) of each trajectory to the one started from point 0,
and the header reports each trajectory's fitted contraction slope.
"""


from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from spdmidrange.core.midrange.imr import ImrConfig, inductive_midrange
from spdmidrange.core.thompson.metric import thompson_distance
from spdmidrange.core.util.parallel import ordered_map
from spdmidrange.core.util.rng import run_stream

from .convergence import fit_window, loglog_slope
from .generators import gen_random_dataset
from .tables import CsvTable, seed_comment

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset
    from spdmidrange.core.spd.matrix import SpdMatrix

    from .generators import ExperimentConfig


_SAMPLED_ITERATIONS: int = 200


def sampled_iterations(num_iters: int) -> list[int]:
    """Log-spaced iteration indices in [1, num_iters + 1]."""
    return sorted({int(k) for k in np.geomspace(1, num_iters + 1, _SAMPLED_ITERATIONS).round()})


def trajectory_distances(data: Dataset, num_iters: int, reference: int = 0) -> dict[int, dict[int, float]]:
    """{init: {k: d∞(X_k^init, X_k^reference)}} over the sampled iterations, for every other init."""
    ks: set[int] = set(sampled_iterations(num_iters))

    def sampled_run(init: int) -> dict[int, SpdMatrix]:
        kept: dict[int, SpdMatrix] = {}
        inductive_midrange(data, ImrConfig(num_iters=num_iters, init=init),
                           observer=lambda k, x: kept.__setitem__(k, x) if k in ks else None)
        return kept

    runs: list[dict[int, SpdMatrix]] = ordered_map(sampled_run, list(range(len(data))))
    ref: dict[int, SpdMatrix] = runs[reference]
    return {init: {k: thompson_distance(run[k], ref[k]) for k in sorted(ks)}
            for init, run in enumerate(runs) if init != reference}


def experiment_trajectories(cfg: ExperimentConfig, dim: int = 2, n_points: int = 10) -> str:
    """CSV of trajectory-to-reference distances; header comments carry the fitted slopes."""
    data: Dataset = gen_random_dataset(dim, n_points, run_stream(cfg.seed, 0, 0))
    distances: dict[int, dict[int, float]] = trajectory_distances(data, cfg.num_iters)

    k_lo, k_hi = fit_window(cfg.num_iters)
    table = CsvTable(columns=('k', 'init_index', 'distance_to_reference'),
                     comments=[seed_comment('trajectories', cfg.seed, d=dim, N=n_points, num_iters=cfg.num_iters),
                               'distance_to_reference: d∞(X_k, X_k of the run initialized at data point 0)'])

    for init, by_k in distances.items():
        window: list[int] = [k for k in by_k if k_lo <= k <= k_hi]
        slope: float = loglog_slope(np.array(window, dtype=float), np.array([by_k[k] for k in window]))
        table.comments.append(f'contraction slope init={init}: {slope!r}')

    table.extend((k, init, dist) for init, by_k in distances.items() for k, dist in by_k.items())
    return table.render()
