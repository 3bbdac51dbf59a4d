"""
================================
ACTIVE / EXTERNAL DATA DETECTION
================================

The IMR limit depends only on the data points it keeps stepping toward.
`detect_active_data(...)` runs the IMR once from every data point and collects:

- external data E: indices ever chosen as farthest point, in any run;
- active data A ⊆ E: indices chosen after the burn-in cutoff floor(burn_in_fraction · num_iters);
- internal data: everything never chosen.

The classification is empirical: it depends on `num_iters` and on the burn-in fraction.
"""


from __future__ import annotations

from dataclasses import dataclass, field
from math import floor
from typing import TYPE_CHECKING

from loguru import logger

from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdValidationError
from spdmidrange.core.util.parallel import ordered_map

from .imr import ImrConfig, inductive_midrange

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset


@dataclass(frozen=True)
class ActiveDataReport:
    """Index sets A ⊆ E and the internal complement of E."""

    active: frozenset[int] = field(init=True,
                                   repr=True,
                                   hash=None,
                                   compare=True,
                                   metadata=None,
                                   kw_only=False)

    external: frozenset[int] = field(init=True,
                                     repr=True,
                                     hash=None,
                                     compare=True,
                                     metadata=None,
                                     kw_only=False)

    internal: frozenset[int] = field(init=True,
                                     repr=True,
                                     hash=None,
                                     compare=True,
                                     metadata=None,
                                     kw_only=False)

    def __post_init__(self):
        assert self.active <= self.external, f'*** ACTIVE {set(self.active)} NOT WITHIN EXTERNAL {set(self.external)} ***'
        assert not self.external & self.internal, '*** EXTERNAL AND INTERNAL DATA OVERLAP ***'

    def role(self, i: int) -> str:
        """'active', 'external' or 'internal' (active points are reported as active only)."""
        if i in self.active:
            return 'active'
        return 'external' if i in self.external else 'internal'


def detect_active_data(data: Dataset, num_iters: int | None = None,
                       burn_in_fraction: float | None = None) -> ActiveDataReport:
    """Classify data indices into active, external and internal by running the IMR from every point."""
    n: int = len(data.require_nonempty())
    num_iters: int = num_iters or SpdConfig.IMR_NUM_ITERS
    burn_in_fraction: float = SpdConfig.ACTIVE_BURN_IN_FRACTION if burn_in_fraction is None else burn_in_fraction
    if not 0 < burn_in_fraction < 1:
        raise SpdValidationError(f'*** BURN-IN FRACTION {burn_in_fraction} IS OUTSIDE (0, 1) ***')

    cutoff: int = floor(burn_in_fraction * num_iters)

    def targets_from(init: int) -> tuple[set[int], set[int]]:
        _, trace = inductive_midrange(data, ImrConfig(num_iters=num_iters, init=init, record_trace=True))
        # trace.targets[k - 1] is the point chosen at step k
        return set(trace.targets), set(trace.targets[cutoff:])

    external: set[int] = set()
    active: set[int] = set()
    for run_external, run_active in ordered_map(targets_from, list(range(n)), desc='Active data'):
        external |= run_external
        active |= run_active

    logger.info(f'Active data: {len(active)} active, {len(external)} external of {n} points '
                f'({num_iters} iterations, burn-in cutoff {cutoff})')

    return ActiveDataReport(active=frozenset(active), external=frozenset(external),
                            internal=frozenset(range(n)) - frozenset(external))
