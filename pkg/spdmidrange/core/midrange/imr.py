"""
========================
INDUCTIVE MIDRANGE (IMR)
========================

`inductive_midrange(...)` is `spdmidrange`'s centroid of SPD data under the Thompson metric.

Given X_1, the IMR repeats for k = 1, 2, ...:

- find the data point Y_k↑ farthest from X_k in d∞ (ties: lowest index);
- set X_{k+1} = X_k *_{1/(k+1)} Y_k↑, the weighted geometric midrange (Nussbaum geodesic).

Steps shrink like 1/k, and every step only needs extremal generalized eigenvalues:
the farthest-point search whitens the whole dataset by X_k once, and the eigenvalues it finds for
Y_k↑ are reused to build the step.
"""


from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum, auto
from typing import TYPE_CHECKING

from loguru import logger
import numpy as np

from spdmidrange.core.spd.linalg import gen_extremal_eig_batch
from spdmidrange.core.spd.matrix import SpdMatrix
from spdmidrange.core.thompson.geodesic import nussbaum_point
from spdmidrange.core.thompson.metric import distance_from_extremes, thompson_distances
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import DimensionMismatch, LengthMismatch, SpdValidationError

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset


type IterateObserver = Callable[[int, SpdMatrix], None]  # called with (k, X_k)


class TieBreak(StrEnum):
    """Rule choosing among equidistant farthest points."""

    LOWEST_INDEX: str = auto()


@dataclass
class ImrConfig:
    """IMR run parameters."""

    # number of IMR steps; the result is X_{num_iters + 1}
    num_iters: int = field(default_factory=lambda: SpdConfig.IMR_NUM_ITERS,
                           init=True,
                           repr=True,
                           hash=None,
                           compare=True,
                           metadata=None,
                           kw_only=False)

    # X_1: index into the dataset, or an explicit matrix
    init: int | SpdMatrix = 0

    tie_break: TieBreak = TieBreak.LOWEST_INDEX

    record_trace: bool = False

    # stop once IMR_EARLY_STOP_PATIENCE consecutive steps are shorter than IMR_EARLY_STOP_TOL
    early_stop: bool = False

    def __post_init__(self):
        if self.num_iters < 1:
            raise SpdValidationError(f'*** IMR NEEDS num_iters >= 1, GOT {self.num_iters} ***')
        self.tie_break: TieBreak = TieBreak(self.tie_break)


@dataclass
class ImrTrace:
    """Recorded IMR iterates X_1, X_2, ..., chosen targets and step lengths."""

    iterates: list[SpdMatrix] = field(default_factory=list)

    # index of Y_k↑ chosen at step k
    targets: list[int] = field(default_factory=list)

    # d∞(X_k, X_{k+1})
    step_distances: list[float] = field(default_factory=list)

    def __post_init__(self):
        if self.iterates and not len(self.targets) == len(self.step_distances) == len(self.iterates) - 1:
            raise LengthMismatch(f'*** TRACE HAS {len(self.iterates)} ITERATES, {len(self.targets)} TARGETS '
                                 f'AND {len(self.step_distances)} STEPS ***')

    @property
    def final(self) -> SpdMatrix:
        return self.iterates[-1]

    def to_csv(self, final: SpdMatrix | None = None) -> str:
        """CSV with columns k, target_index, step_distance, d_to_final (X_k against `final`, default last iterate)."""
        final: SpdMatrix = final or self.final
        d_to_final: np.ndarray = thompson_distances(final, self.iterates[:-1]) if self.targets else np.empty(0)
        lines: list[str] = ['k,target_index,step_distance,d_to_final']
        lines.extend(f'{k},{target},{step!r},{float(dist)!r}'
                     for k, (target, step, dist) in enumerate(zip(self.targets, self.step_distances, d_to_final),
                                                              start=1))
        return '\n'.join(lines) + '\n'


def _resolve_init(data: Dataset, init: int | SpdMatrix) -> SpdMatrix:
    if isinstance(init, SpdMatrix):
        if init.dim != data.dim:
            raise DimensionMismatch(f'*** INITIALIZATION OF DIMENSION {init.dim} FOR DATA OF DIMENSION {data.dim} ***')
        return init

    if not 0 <= init < len(data):
        raise SpdValidationError(f'*** INITIALIZATION INDEX {init} OUTSIDE DATASET OF SIZE {len(data)} ***')
    return data[init]


def inductive_midrange(data: Dataset, cfg: ImrConfig | None = None,
                       observer: IterateObserver | None = None) -> tuple[SpdMatrix, ImrTrace | None]:
    """Run the IMR on `data` and return X_{num_iters + 1}, plus the trace if `cfg.record_trace`.

    `observer`, if given, sees every iterate (k, X_k) as it is produced, starting with (1, X_1),
    which lets callers keep the iterates they need without recording all of them.
    """
    cfg: ImrConfig = cfg or ImrConfig()
    stack: np.ndarray = data.require_nonempty().stack

    x: SpdMatrix = _resolve_init(data, cfg.init)
    trace: ImrTrace | None = ImrTrace(iterates=[x]) if cfg.record_trace else None
    if observer:
        observer(1, x)

    quiet_steps: int = 0
    for k in range(1, cfg.num_iters + 1):
        lam_min, lam_max = gen_extremal_eig_batch(x, stack)
        dists: np.ndarray = distance_from_extremes(lam_min, lam_max)

        # np.argmax returns the first maximum: lowest-index tie-break
        target: int = int(np.argmax(dists))
        weight: float = 1 / (k + 1)

        x = nussbaum_point(x, data[target], float(lam_min[target]), float(lam_max[target]), weight)
        # the geodesic is parameterized proportionally to distance
        step: float = weight * float(dists[target])

        if trace:
            trace.iterates.append(x)
            trace.targets.append(target)
            trace.step_distances.append(step)
        if observer:
            observer(k + 1, x)

        if cfg.early_stop:
            quiet_steps = quiet_steps + 1 if step < SpdConfig.IMR_EARLY_STOP_TOL else 0
            if quiet_steps >= SpdConfig.IMR_EARLY_STOP_PATIENCE:
                logger.info(f'IMR stopped early after {k} of {cfg.num_iters} steps')
                break

    return x, trace


def imr_cost(x: SpdMatrix, data: Dataset) -> float:
    """Return the midrange cost max_i d∞(X, Y_i)."""
    return float(np.max(thompson_distances(x, data.require_nonempty().stack)))
