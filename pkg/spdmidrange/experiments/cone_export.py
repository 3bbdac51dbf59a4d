"""
===========
CONE EXPORT
===========

Rows of cone coordinates for plotting 2x2 data and IMR trajectories in R^3.
Each row is x, y, z, kind ('data' or 'iterate'), index, role:
data points carry their active/external/internal role when a report is given,
iterates carry 'trajectory'.
"""


from __future__ import annotations

from typing import TYPE_CHECKING

from spdmidrange.core.spd.cone import cone_projection
from spdmidrange.core.util.errors import WrongDimension

from .tables import CsvTable

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset
    from spdmidrange.core.midrange.active import ActiveDataReport
    from spdmidrange.core.midrange.imr import ImrTrace


def _coord(value: float) -> str:
    return f'{value:.17g}'


def export_cone_csv(data: Dataset, trace: ImrTrace | None = None, report: ActiveDataReport | None = None) -> str:
    """CSV of cone-projected data points and, if given, trace iterates."""
    if data.require_nonempty().dim != 2:
        raise WrongDimension(f'*** CONE EXPORT NEEDS 2x2 DATA, GOT {data.dim}x{data.dim} ***')

    table = CsvTable(columns=('x', 'y', 'z', 'kind', 'index', 'role'))
    for i, point in enumerate(data):
        table.add(*map(_coord, cone_projection(point)), 'data', i, report.role(i) if report else '')

    if trace:
        for k, x in enumerate(trace.iterates, start=1):
            table.add(*map(_coord, cone_projection(x)), 'iterate', k, 'trajectory')

    return table.render()
