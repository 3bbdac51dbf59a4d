"""
=========================
INITIALIZATION INVARIANCE
=========================

For one random dataset per (d, N) configuration, the IMR is started from `runs` random SPD
initializations. The table reports the largest and the average pairwise d∞ separation of the
results after `num_iters` steps, how many runs converged (finite positive-definite iterates
throughout), and the largest separation after 2 · `num_iters` steps, read off the same runs.
"""


from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.clustering.dataset import Dataset
from spdmidrange.core.midrange.imr import ImrConfig, inductive_midrange
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.errors import SpdError
from spdmidrange.core.util.parallel import ordered_map
from spdmidrange.core.util.rng import run_stream

from .generators import gen_random_dataset, gen_random_spd
from .tables import CsvTable, seed_comment

if TYPE_CHECKING:
    from spdmidrange.core.spd.matrix import SpdMatrix

    from .generators import ExperimentConfig


# (d, N) configurations
INVARIANCE_CONFIGS: tuple[tuple[int, int], ...] = ((2, 5), (5, 5), (20, 5), (100, 5))


@dataclass(frozen=True)
class InvarianceResult:
    """Separation statistics of IMR results over random initializations."""

    max_separation: float

    avg_separation: float

    converged: int

    runs: int

    # max separation after twice as many iterations
    max_separation_doubled: float


def pairwise_separations(points: Sequence[SpdMatrix]) -> np.ndarray:
    """All d∞(P_i, P_j), i < j."""
    if len(points) < 2:
        return np.zeros(1)
    return np.concatenate([thompson_distances(p, points[i + 1:]) for i, p in enumerate(points[:-1])])


def initialization_invariance(data: Dataset, inits: Sequence[SpdMatrix], num_iters: int,
                              progress: bool = False) -> InvarianceResult:
    """Run the IMR from every initialization for 2 · `num_iters` steps and compare results at both horizons."""

    def one_run(init: SpdMatrix) -> tuple[SpdMatrix, SpdMatrix] | None:
        halfway: dict[int, SpdMatrix] = {}

        def keep_halfway(k: int, x: SpdMatrix):
            if k == num_iters + 1:
                halfway[k] = x

        try:
            final, _ = inductive_midrange(data, ImrConfig(num_iters=2 * num_iters, init=init), observer=keep_halfway)
        except SpdError as err:
            # every iterate passes make_spd, so a failure means the run left the cone
            logger.warning(f'IMR run from random initialization failed: {err}')
            return None
        return halfway[num_iters + 1], final

    results = ordered_map(one_run, list(inits), desc='Initializations', progress=progress)
    converged: list[tuple[SpdMatrix, SpdMatrix]] = [r for r in results if r is not None]
    if not converged:
        return InvarianceResult(max_separation=float('nan'), avg_separation=float('nan'),
                                converged=0, runs=len(inits), max_separation_doubled=float('nan'))

    separations: np.ndarray = pairwise_separations([at_n for at_n, _ in converged])
    separations_doubled: np.ndarray = pairwise_separations([at_2n for _, at_2n in converged])

    return InvarianceResult(max_separation=float(np.max(separations)),
                            avg_separation=float(np.mean(separations)),
                            converged=len(converged), runs=len(inits),
                            max_separation_doubled=float(np.max(separations_doubled)))


def experiment_invariance(cfg: ExperimentConfig,
                          configurations: Sequence[tuple[int, int]] = INVARIANCE_CONFIGS,
                          progress: bool = False) -> str:
    """CSV with one row of separation statistics per (d, N) configuration."""
    table = CsvTable(columns=('d', 'N', 'runs', 'max_separation', 'avg_separation', 'converged',
                              'max_separation_2x_iters'),
                     comments=[seed_comment('invariance', cfg.seed, num_iters=cfg.num_iters, runs=cfg.runs),
                               'separations: Thompson distance d∞ between IMR results of different initializations'])

    for c, (dim, n) in enumerate(configurations):
        # counter 0 is the dataset, counters 1.. the initializations
        data: Dataset = gen_random_dataset(dim, n, run_stream(cfg.seed, c, 0))
        inits: list[SpdMatrix] = [gen_random_spd(dim, run_stream(cfg.seed, c, run + 1)) for run in range(cfg.runs)]

        result: InvarianceResult = initialization_invariance(data, inits, cfg.num_iters, progress=progress)
        table.add(dim, n, result.runs, result.max_separation, result.avg_separation, result.converged,
                  result.max_separation_doubled)
        logger.info(f'Invariance (d={dim}, N={n}): max {result.max_separation:.4f}, avg {result.avg_separation:.4f}, '
                    f'{result.converged}/{result.runs} converged')

    return table.render()
