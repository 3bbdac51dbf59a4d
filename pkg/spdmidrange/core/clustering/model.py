"""
=============
CLUSTER MODEL
=============

Result of a clustering run: one IMR centroid per cluster, one cluster id per data point,
and optionally the run's BIC score.
"""


from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NotRequired, Required, TypedDict

import numpy as np

from spdmidrange.core.spd.matrix import SpdMatrix, SpdMatrixDict
from spdmidrange.core.thompson.metric import thompson_distances
from spdmidrange.core.util.errors import SpdValidationError

if TYPE_CHECKING:
    from .dataset import Dataset


class ClusterModelDict(TypedDict, total=False):
    k: Required[int]
    assignment: Required[list[int]]
    centroids: Required[list[SpdMatrixDict]]
    bic: NotRequired[float | None]


@dataclass
class ClusterModel:
    """Centroids μ_L and cluster assignment of a dataset."""

    centroids: list[SpdMatrix]

    # cluster id per data point, in dataset order
    assignment: list[int]

    bic: float | None = field(default=None,
                              init=True,
                              repr=True,
                              hash=None,
                              compare=True,
                              metadata=None,
                              kw_only=False)

    # Lloyd rounds run by the last k-means pass
    rounds: int = 0

    # whether labels stabilized before the round cap
    converged: bool = True

    def __post_init__(self):
        self.centroids: list[SpdMatrix] = list(self.centroids)
        self.assignment: list[int] = [int(j) for j in self.assignment]

        if not self.centroids:
            raise SpdValidationError('*** CLUSTER MODEL NEEDS AT LEAST ONE CENTROID ***')
        if any(not 0 <= j < self.k for j in self.assignment):
            raise SpdValidationError(f'*** ASSIGNMENT IDS MUST LIE IN [0, {self.k}) ***')

    @property
    def k(self) -> int:
        return len(self.centroids)

    def members(self, j: int) -> list[int]:
        return [i for i, label in enumerate(self.assignment) if label == j]

    def clusters(self) -> list[list[int]]:
        """Member indices of every cluster, by cluster id."""
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for i, label in enumerate(self.assignment):
            groups[label].append(i)
        return groups

    def cluster_costs(self, data: Dataset) -> list[float]:
        """Within-cluster midrange cost max_{i ∈ L} d∞(Y_i, μ_L) per cluster (0 for empty clusters)."""
        return [float(np.max(thompson_distances(mu, data.subset(idx).stack))) if idx else 0.0
                for mu, idx in zip(self.centroids, self.clusters())]

    def to_json_dict(self) -> ClusterModelDict:
        return {'k': self.k,
                'assignment': list(self.assignment),
                'centroids': [mu.to_json_dict() for mu in self.centroids],
                'bic': self.bic}

    @classmethod
    def from_json_dict(cls, d: ClusterModelDict, /) -> ClusterModel:
        model = cls(centroids=[SpdMatrix.from_json_dict(mu) for mu in d['centroids']],
                    assignment=d['assignment'],
                    bic=d.get('bic'))
        if model.k != d['k']:
            raise SpdValidationError(f'*** DECLARED k = {d["k"]} BUT {model.k} CENTROIDS ***')
        return model
