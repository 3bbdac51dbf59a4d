"""
===================
CLUSTERING ACCURACY
===================

Scores a clustering against ground truth.

Predicted clusters are matched one-to-one to true clusters greedily by overlap count
(ties: lower true-cluster id, then lower smallest member index, so the matching does not depend
on how predicted clusters happen to be numbered). Then:

- points identified: points lying in the intersection of a matched (predicted, true) pair;
- clusters identified: true clusters whose matched predicted cluster has exactly the same members;
- clusters lost: true clusters with a strict majority of their points inside a predicted cluster
  that is matched to a different true cluster.
"""


from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, ClassVar

from spdmidrange.core.util.errors import LengthMismatch, MissingTruth

if TYPE_CHECKING:
    from .model import ClusterModel


@dataclass(frozen=True)
class AccuracyReport:
    """Agreement counts of a predicted clustering with the true one."""

    points_identified: int

    clusters_identified: int

    clusters_lost: int

    n_points: int = 0

    n_true_clusters: int = 0

    CSV_HEADER: ClassVar[str] = 'points_identified,clusters_identified,clusters_lost,n_points,n_true_clusters'

    def __post_init__(self):
        assert 0 <= self.points_identified <= self.n_points, \
            f'*** {self.points_identified} POINTS IDENTIFIED OF {self.n_points} ***'
        assert self.clusters_identified + self.clusters_lost <= self.n_true_clusters, \
            f'*** {self.clusters_identified} IDENTIFIED + {self.clusters_lost} LOST > {self.n_true_clusters} ***'

    def to_csv_row(self) -> str:
        return (f'{self.points_identified},{self.clusters_identified},{self.clusters_lost},'
                f'{self.n_points},{self.n_true_clusters}')


def score_accuracy(model: ClusterModel, truth: Sequence[int] | None) -> AccuracyReport:
    """Compare `model.assignment` with the ground-truth labels `truth`."""
    if truth is None:
        raise MissingTruth('*** ACCURACY SCORING NEEDS GROUND-TRUTH LABELS ***')
    if len(truth) != len(model.assignment):
        raise LengthMismatch(f'*** {len(truth)} TRUE LABELS FOR {len(model.assignment)} ASSIGNED POINTS ***')

    predicted: list[int] = list(model.assignment)
    true: list[int] = [int(t) for t in truth]

    overlap: Counter[tuple[int, int]] = Counter(zip(predicted, true))
    first_member: dict[tuple[int, int], int] = {}
    for i, pair in enumerate(zip(predicted, true)):
        first_member.setdefault(pair, i)

    pred_of: dict[int, int] = {}
    true_of: dict[int, int] = {}
    for (p, t) in sorted(overlap, key=lambda pair: (-overlap[pair], pair[1], first_member[pair])):
        if p not in true_of and t not in pred_of:
            pred_of[t], true_of[p] = p, t

    true_members: dict[int, set[int]] = {}
    pred_members: dict[int, set[int]] = {}
    for i, (p, t) in enumerate(zip(predicted, true)):
        true_members.setdefault(t, set()).add(i)
        pred_members.setdefault(p, set()).add(i)

    points_identified: int = sum(overlap[(p, t)] for t, p in pred_of.items())
    clusters_identified: int = sum(t in pred_of and pred_members[pred_of[t]] == members
                                   for t, members in true_members.items())

    clusters_lost: int = 0
    for t, members in true_members.items():
        # at most one predicted cluster can hold a strict majority
        (p, count), = Counter(predicted[i] for i in members).most_common(1)
        if 2 * count > len(members) and true_of.get(p, t) != t:
            clusters_lost += 1

    return AccuracyReport(points_identified=points_identified, clusters_identified=clusters_identified,
                          clusters_lost=clusters_lost, n_points=len(true), n_true_clusters=len(true_members))
