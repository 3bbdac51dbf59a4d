"""
===========
SPD DATASET
===========

`Dataset` is an ordered collection of SpdMatrix points of one dimension,
optionally carrying ground-truth cluster labels.
"""


from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import NotRequired, Required, TypedDict

import numpy as np

from spdmidrange.core.spd.matrix import SpdMatrix, SpdMatrixDict
from spdmidrange.core.util.errors import DimensionMismatch, EmptyDataset, LengthMismatch


class DatasetDict(TypedDict, total=False):
    points: Required[list[SpdMatrixDict]]
    labels: NotRequired[list[int]]


@dataclass(frozen=True, eq=False)
class Dataset:
    """Ordered SPD data with optional ground-truth labels."""

    points: tuple[SpdMatrix, ...]

    # ground-truth cluster id per point
    labels: tuple[int, ...] | None = field(default=None,
                                           init=True,
                                           repr=False,
                                           hash=None,
                                           compare=False,
                                           metadata=None,
                                           kw_only=False)

    def __post_init__(self):
        object.__setattr__(self, 'points', tuple(self.points))
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(int(label) for label in self.labels))
            if len(self.labels) != len(self.points):
                raise LengthMismatch(f'*** {len(self.labels)} LABELS FOR {len(self.points)} POINTS ***')

        if len({p.dim for p in self.points}) > 1:
            raise DimensionMismatch(f'*** DATASET MIXES DIMENSIONS {sorted({p.dim for p in self.points})} ***')

    @classmethod
    def of(cls, points: Iterable[SpdMatrix], labels: Iterable[int] | None = None) -> Dataset:
        return cls(points=tuple(points), labels=None if labels is None else tuple(labels))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[SpdMatrix]:
        return iter(self.points)

    def __getitem__(self, i: int) -> SpdMatrix:
        return self.points[i]

    def require_nonempty(self) -> Dataset:
        if not self.points:
            raise EmptyDataset('*** DATASET IS EMPTY ***')
        return self

    @property
    def dim(self) -> int:
        return self.require_nonempty().points[0].dim

    @cached_property
    def stack(self) -> np.ndarray:
        """Read-only (N, d, d) array of all point entries."""
        stack: np.ndarray = np.stack([p.entries for p in self.require_nonempty().points])
        stack.flags.writeable = False
        return stack

    def subset(self, indices: Sequence[int]) -> Dataset:
        """Return the sub-dataset at `indices` (in the given order), labels included."""
        return Dataset(points=tuple(self.points[i] for i in indices),
                       labels=None if self.labels is None else tuple(self.labels[i] for i in indices))

    def to_json_dict(self) -> DatasetDict:
        d: DatasetDict = {'points': [p.to_json_dict() for p in self.points]}
        if self.labels is not None:
            d['labels'] = list(self.labels)
        return d

    @classmethod
    def from_json_dict(cls, d: DatasetDict, /) -> Dataset:
        return cls.of(points=(SpdMatrix.from_json_dict(p) for p in d['points']), labels=d.get('labels'))
