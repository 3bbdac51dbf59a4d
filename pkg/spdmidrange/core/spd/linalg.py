"""
============================
DENSE LINEAR-ALGEBRA KERNELS
============================

Symmetric eigendecomposition, spectral matrix functions, and extremal generalized eigenvalues
of SPD pencils.

Generalized eigenvalues of `B @ inv(A)` are always computed by Cholesky whitening:
with `A = L @ L.T` they are the ordinary eigenvalues of the symmetric matrix `inv(L) @ B @ inv(L).T`,
so `inv(A)` is never formed. Up to `SpdConfig.DENSE_EIG_MAX_DIM` the full symmetric spectrum is
computed and its extremes taken; above it, an iterative Lanczos solver returns only both ends.
"""


from __future__ import annotations

from typing import TYPE_CHECKING

from loguru import logger
import numpy as np
from scipy.linalg import LinAlgError, eigh, solve_triangular
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigsh

from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import DimensionMismatch, NoConvergence

from .matrix import EigenPair, SpdMatrix, make_spd

if TYPE_CHECKING:
    from .matrix import Matrix


def check_same_dim(a: SpdMatrix, b: SpdMatrix):
    if a.dim != b.dim:
        raise DimensionMismatch(f'*** DIMENSIONS {a.dim} AND {b.dim} DIFFER ***')


def sym_eig(a: SpdMatrix | Matrix) -> tuple[np.ndarray, Matrix]:
    """Return ascending eigenvalues and orthonormal eigenvectors (as columns) of a symmetric matrix."""
    m: Matrix = a.entries if isinstance(a, SpdMatrix) else np.asarray(a, dtype=float)
    try:
        return eigh(m, check_finite=False)
    except LinAlgError as err:
        raise NoConvergence(f'*** SYMMETRIC EIGENSOLVER DID NOT CONVERGE ON {m.shape[0]}x{m.shape[0]} MATRIX ***') from err


def spectral_map(a: SpdMatrix | Matrix, fn) -> Matrix:
    eigvals, eigvecs = sym_eig(a)
    m: Matrix = (eigvecs * fn(eigvals)) @ eigvecs.T
    return (m + m.T) / 2


def matrix_log(a: SpdMatrix) -> Matrix:
    """Principal matrix logarithm V diag(log λ) V.T (a symmetric matrix)."""
    return spectral_map(a, np.log)


def matrix_exp(s: Matrix) -> SpdMatrix:
    """Matrix exponential of a symmetric matrix, V diag(exp λ) V.T."""
    return make_spd(spectral_map(s, np.exp))


def matrix_power(a: SpdMatrix, p: float) -> SpdMatrix:
    """Spectral power A^p, V diag(λ^p) V.T."""
    return make_spd(spectral_map(a, lambda eigvals: np.exp(p * np.log(eigvals))))


def whiten(a: SpdMatrix, b: SpdMatrix | Matrix) -> Matrix:
    """Return symmetric inv(L) @ B @ inv(L).T where A = L @ L.T.

    `b` may be a single matrix or a stack of shape (n, d, d).
    """
    b_arr: Matrix = b.entries if isinstance(b, SpdMatrix) else b
    l_inv: Matrix = solve_triangular(a.chol, np.eye(a.dim), lower=True, check_finite=False)
    m: Matrix = l_inv @ b_arr @ l_inv.T
    return (m + np.swapaxes(m, -1, -2)) / 2


def _iterative_extremes(m: Matrix) -> tuple[float, float]:
    try:
        eigvals: np.ndarray = eigsh(m, k=2, which='BE', tol=SpdConfig.ITERATIVE_EIG_TOL,
                                    maxiter=SpdConfig.ITERATIVE_EIG_MAX_ITERS, return_eigenvectors=False)
    except (ArpackNoConvergence, ArpackError) as err:
        raise NoConvergence(f'*** ITERATIVE EXTREMAL EIGENSOLVER DID NOT CONVERGE ON {m.shape[0]}x{m.shape[0]} PENCIL '
                            f'WITHIN {SpdConfig.ITERATIVE_EIG_MAX_ITERS} ITERATIONS ***') from err
    return float(np.min(eigvals)), float(np.max(eigvals))


def _extremes(whitened: Matrix) -> tuple[np.ndarray, np.ndarray]:
    """Extremal eigenvalues of one symmetric matrix or of a stack of them."""
    dim: int = whitened.shape[-1]

    # the Lanczos solver needs more than the two requested eigenvalues
    if dim <= max(SpdConfig.DENSE_EIG_MAX_DIM, 3):
        try:
            eigvals: np.ndarray = np.linalg.eigvalsh(whitened)
        except np.linalg.LinAlgError as err:
            raise NoConvergence(f'*** SYMMETRIC EIGENSOLVER DID NOT CONVERGE ON {dim}x{dim} PENCIL ***') from err
        return eigvals[..., 0], eigvals[..., -1]

    stack: Matrix = whitened.reshape(-1, dim, dim)
    lo_hi: np.ndarray = np.array([_iterative_extremes(m) for m in stack])
    return lo_hi[:, 0].reshape(whitened.shape[:-2]), lo_hi[:, 1].reshape(whitened.shape[:-2])


def gen_extremal_eig(a: SpdMatrix, b: SpdMatrix) -> EigenPair:
    """Return extremal eigenvalues (λ_min, λ_max) of the pencil B @ inv(A)."""
    check_same_dim(a, b)
    lam_min, lam_max = _extremes(whiten(a, b))
    return EigenPair(lambda_min=float(lam_min), lambda_max=float(lam_max))


def gen_extremal_eig_batch(a: SpdMatrix, bs: Matrix) -> tuple[np.ndarray, np.ndarray]:
    """Return arrays (λ_min, λ_max) of the pencils B_i @ inv(A) for a stack `bs` of shape (n, d, d).

    One whitening factor serves the whole stack.
    """
    if bs.ndim != 3 or bs.shape[1:] != (a.dim, a.dim):
        raise DimensionMismatch(f'*** STACK OF SHAPE {bs.shape} DOES NOT MATCH DIMENSION {a.dim} ***')
    return _extremes(whiten(a, bs))


def gen_eig(a: SpdMatrix, b: SpdMatrix) -> np.ndarray:
    """Return the full ascending generalized spectrum of B @ inv(A)."""
    check_same_dim(a, b)
    return sym_eig(whiten(a, b))[0]


def loewner_leq(a: SpdMatrix | Matrix, b: SpdMatrix | Matrix, tol: float = 1e-10) -> bool:
    """Check A ⪯ B in the Löwner order, i.e. B - A positive semidefinite up to a relative tolerance."""
    a_arr: Matrix = a.entries if isinstance(a, SpdMatrix) else np.asarray(a, dtype=float)
    b_arr: Matrix = b.entries if isinstance(b, SpdMatrix) else np.asarray(b, dtype=float)
    scale: float = max(float(np.max(np.abs(a_arr))), float(np.max(np.abs(b_arr))), 1e-300)
    lowest: float = float(sym_eig((b_arr - a_arr + (b_arr - a_arr).T) / 2)[0][0])
    if lowest < -tol * scale:
        logger.debug(f'Löwner check failed: λ_min(B - A) = {lowest:.3e}')
        return False
    return True
