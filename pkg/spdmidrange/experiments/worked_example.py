"""
========================
THREE-MATRIX 2x2 EXAMPLE
========================

A small 2x2 dataset on which the IMR limit can be compared with the true minimax center
found by the d = 2 optimization oracle.
"""


from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from spdmidrange.core.clustering.dataset import Dataset
from spdmidrange.core.midrange.imr import ImrConfig, imr_cost, inductive_midrange
from spdmidrange.core.midrange.oracle import optimization_midrange_2d
from spdmidrange.core.spd.matrix import SpdMatrix, make_spd
from spdmidrange.core.thompson.metric import thompson_distance


EXAMPLE_ROWS: tuple[list[list[float]], ...] = ([[0.95, -0.6], [-0.6, 1.1]],
                                               [[1.0, 0.5], [0.5, 2.1]],
                                               [[2.5, -0.2], [-0.2, 1.2]])


def example_dataset() -> Dataset:
    return Dataset.of(make_spd(np.array(rows)) for rows in EXAMPLE_ROWS)


@dataclass(frozen=True)
class WorkedExampleResult:
    """IMR and optimization midranges of one dataset, with their costs and separation."""

    imr: SpdMatrix
    imr_cost: float
    optimum: SpdMatrix
    optimum_cost: float
    separation: float

    @property
    def cost_increase(self) -> float:
        """Relative cost excess of the IMR over the optimum."""
        return self.imr_cost / self.optimum_cost - 1 if self.optimum_cost else 0.0

    def summary_lines(self) -> list[str]:
        return [f'IMR midrange:          {np.array2string(self.imr.entries, precision=4)}',
                f'IMR cost:              {self.imr_cost:.6f}',
                f'optimization midrange: {np.array2string(self.optimum.entries, precision=4)}',
                f'optimization cost:     {self.optimum_cost:.6f}',
                f'cost increase:         {100 * self.cost_increase:.2f}%',
                f'd∞(IMR, optimum):      {self.separation:.6f}']


def run_worked_example(data: Dataset | None = None, num_iters: int | None = None) -> WorkedExampleResult:
    data: Dataset = example_dataset() if data is None else data
    imr, _ = inductive_midrange(data, ImrConfig(num_iters=num_iters) if num_iters else None)
    optimum: SpdMatrix = optimization_midrange_2d(data)
    return WorkedExampleResult(imr=imr, imr_cost=imr_cost(imr, data),
                               optimum=optimum, optimum_cost=imr_cost(optimum, data),
                               separation=thompson_distance(imr, optimum))
