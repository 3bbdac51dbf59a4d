"""
====================================
SYMMETRIC POSITIVE DEFINITE MATRICES
====================================

`SpdMatrix` is `spdmidrange`'s validated element of the SPD cone P_d.

A matrix only becomes an `SpdMatrix` through `make_spd(...)`, which symmetrizes the raw entries,
checks that the asymmetry was within tolerance, and proves positive-definiteness by a successful
Cholesky factorization. The factor is kept alongside the entries, since every generalized
eigenvalue computation against this matrix starts by whitening with it.

Entries and factor are read-only arrays, so `SpdMatrix` values can be shared freely between threads.
"""


from __future__ import annotations

from dataclasses import dataclass, field
from typing import TypedDict

import numpy as np
from scipy.linalg import LinAlgError, cholesky as _lapack_cholesky

from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import AsymmetryExceedsTolerance, NotPositiveDefinite, NotSquare


type Matrix = np.ndarray  # real 2-D array


class SpdMatrixDict(TypedDict):
    dim: int
    rows: list[list[float]]


@dataclass(frozen=True, eq=False)
class SpdMatrix:
    """Validated symmetric positive definite matrix."""

    # symmetric entries, read-only
    entries: Matrix = field(init=True,
                            repr=True,
                            hash=None,
                            compare=False,
                            metadata=None,
                            kw_only=False)

    # lower-triangular Cholesky factor L with entries = L @ L.T, read-only
    chol: Matrix = field(init=True,
                         repr=False,
                         hash=None,
                         compare=False,
                         metadata=None,
                         kw_only=False)

    # whether construction had to average a non-symmetric input
    symmetrized: bool = False

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def to_json_dict(self) -> SpdMatrixDict:
        """Return `{"dim": d, "rows": [[...], ...]}` representation."""
        return {'dim': self.dim, 'rows': self.entries.tolist()}

    @classmethod
    def from_json_dict(cls, d: SpdMatrixDict, /) -> SpdMatrix:
        """Create SpdMatrix from `{"dim": d, "rows": [[...], ...]}` representation."""
        rows: Matrix = np.asarray(d['rows'], dtype=float)
        if rows.shape != (d['dim'], d['dim']):
            raise NotSquare(f'*** DECLARED DIM {d["dim"]} DOES NOT MATCH ROWS OF SHAPE {rows.shape} ***')
        return make_spd(rows)

    def to_csv(self) -> str:
        """Return CSV text: the dimension on the first line, then one line per row."""
        return '\n'.join([str(self.dim), *(','.join(repr(float(v)) for v in row) for row in self.entries)]) + '\n'

    @classmethod
    def from_csv(cls, text: str, /) -> SpdMatrix:
        """Create SpdMatrix from CSV text written by `.to_csv()`."""
        lines: list[str] = [line for line in text.strip().splitlines() if line.strip()]
        dim: int = int(lines[0])
        return cls.from_json_dict({'dim': dim, 'rows': [[float(v) for v in line.split(',')] for line in lines[1:]]})


@dataclass(frozen=True)
class EigenPair:
    """Extremal generalized eigenvalues of a matrix pencil."""

    lambda_min: float
    lambda_max: float


def _read_only(a: Matrix) -> Matrix:
    a.flags.writeable = False
    return a


def make_spd(raw: Matrix | list[list[float]], tol: float | None = None) -> SpdMatrix:
    """Validate raw entries into an SpdMatrix with entries (raw + raw.T) / 2.

    Raises `NotSquare`, `AsymmetryExceedsTolerance` (relative to max |raw|)
    or `NotPositiveDefinite` (Cholesky failure or non-finite entries).
    """
    a: Matrix = np.array(raw, dtype=float)

    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise NotSquare(f'*** MATRIX OF SHAPE {a.shape} IS NOT A NON-EMPTY SQUARE MATRIX ***')

    if not np.all(np.isfinite(a)):
        raise NotPositiveDefinite('*** MATRIX HAS NON-FINITE ENTRIES ***')

    tol: float = SpdConfig.SYMMETRY_TOL if tol is None else tol
    asymmetry: float = float(np.max(np.abs(a - a.T)))
    if asymmetry > tol * float(np.max(np.abs(a))):
        raise AsymmetryExceedsTolerance(f'*** ASYMMETRY {asymmetry:.3e} EXCEEDS RELATIVE TOLERANCE {tol:.1e} ***')

    symmetrized: bool = asymmetry > 0
    if symmetrized:
        a = (a + a.T) / 2

    try:
        chol: Matrix = _lapack_cholesky(a, lower=True, check_finite=False)
    except LinAlgError as err:
        raise NotPositiveDefinite(f'*** CHOLESKY FACTORIZATION FAILED FOR MATRIX:\n{a}\n***') from err

    return SpdMatrix(entries=_read_only(a), chol=_read_only(chol), symmetrized=symmetrized)


def cholesky(a: SpdMatrix) -> Matrix:
    """Return lower-triangular L with L @ L.T == a.entries."""
    return a.chol
