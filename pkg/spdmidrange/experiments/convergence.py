"""
================
CONVERGENCE RATE
================

The IMR's convergence rate is measured as the least-squares slope of log d∞(X_k, X_final)
against log k, with X_final = X_{num_iters + 1} standing in for the limit and k restricted to
[SLOPE_FIT_MIN_K, min(SLOPE_FIT_MAX_K, num_iters / 10)], which leaves out the late iterations
where the proxy limit itself dominates the distance. A rate of O(1/k) shows as a slope near -1.
"""


from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.midrange.imr import ImrConfig, inductive_midrange
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdValidationError
from spdmidrange.core.util.parallel import ordered_map
from spdmidrange.core.util.rng import run_stream

from .generators import gen_random_dataset
from .tables import CsvTable, seed_comment

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset
    from spdmidrange.core.spd.matrix import SpdMatrix

    from .generators import ExperimentConfig


# (d, N) configurations
CONVERGENCE_CONFIGS: tuple[tuple[int, int], ...] = ((5, 5), (5, 20), (50, 5), (50, 20))


def fit_window(num_iters: int) -> tuple[int, int]:
    """Iteration range [k_lo, k_hi] used for slope fitting."""
    k_hi: int = min(SpdConfig.SLOPE_FIT_MAX_K, num_iters // 10)
    if k_hi <= SpdConfig.SLOPE_FIT_MIN_K:
        raise SpdValidationError(f'*** {num_iters} ITERATIONS LEAVE NO SLOPE-FITTING WINDOW ABOVE '
                                 f'k = {SpdConfig.SLOPE_FIT_MIN_K} ***')
    return SpdConfig.SLOPE_FIT_MIN_K, k_hi


def loglog_slope(ks: np.ndarray, dists: np.ndarray) -> float:
    """Least-squares slope of log(dist) against log(k), ignoring zero distances."""
    keep: np.ndarray = dists > 0
    if np.count_nonzero(keep) < 2:
        return float('nan')
    slope, _ = np.polyfit(np.log(ks[keep]), np.log(dists[keep]), deg=1)
    return float(slope)


def convergence_slope(data: Dataset, num_iters: int, init: int = 0) -> float:
    """Fitted log-log slope of d∞(X_k, X_final) for one IMR run."""
    k_lo, k_hi = fit_window(num_iters)
    window: dict[int, SpdMatrix] = {}

    def keep_window(k: int, x: SpdMatrix):
        if k_lo <= k <= k_hi:
            window[k] = x

    final, _ = inductive_midrange(data, ImrConfig(num_iters=num_iters, init=init), observer=keep_window)

    ks: np.ndarray = np.array(sorted(window), dtype=float)
    dists: np.ndarray = thompson_distances(final, [window[k] for k in sorted(window)])
    return loglog_slope(ks, dists)


def experiment_convergence(cfg: ExperimentConfig,
                           configurations: Sequence[tuple[int, int]] = CONVERGENCE_CONFIGS,
                           progress: bool = False) -> str:
    """CSV of per-run and mean convergence slopes for every (d, N) configuration."""
    jobs: list[tuple[int, int, int, int]] = [(c, dim, n, run)
                                             for c, (dim, n) in enumerate(configurations)
                                             for run in range(cfg.runs)]

    def one_run(job: tuple[int, int, int, int]) -> float:
        c, dim, n, run = job
        return convergence_slope(gen_random_dataset(dim, n, run_stream(cfg.seed, c, run)), cfg.num_iters)

    slopes: list[float] = ordered_map(one_run, jobs, desc='Convergence runs', progress=progress)

    k_lo, k_hi = fit_window(cfg.num_iters)
    table = CsvTable(columns=('d', 'N', 'run', 'slope'),
                     comments=[seed_comment('convergence', cfg.seed, num_iters=cfg.num_iters, runs=cfg.runs),
                               f'slope: least-squares d(log d∞(X_k, X_final)) / d(log k) over k in [{k_lo}, {k_hi}]'])
    for c, (dim, n) in enumerate(configurations):
        run_slopes: list[float] = slopes[c * cfg.runs:(c + 1) * cfg.runs]
        table.extend((dim, n, run, slope) for run, slope in enumerate(run_slopes))

        mean: float = float(np.nanmean(run_slopes))
        table.add(dim, n, 'mean', mean)
        logger.info(f'Convergence (d={dim}, N={n}): mean slope {mean:.4f} over {cfg.runs} runs')

    return table.render()
