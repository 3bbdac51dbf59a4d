"""
====================================
OPTIMIZATION MIDRANGE ORACLE (d = 2)
====================================

Reference minimizer of the midrange cost max_i d∞(X, Y_i) over 2x2 SPD matrices,
used to measure how far the IMR limit is from the true minimax center.

For X = [[a, b], [b, c]] and Y = [[p, q], [q, r]] the pencil Y inv(X) has eigenvalues solving

    det(X) λ² - (a r + c p - 2 b q) λ + det(Y) = 0,

so the cost is available in closed form for a whole grid of candidates at once. The search runs:

1. a coarse grid a ∈ [min a_i, max a_i], c ∈ [min c_i, max c_i], b ∈ (-√(ac), √(ac));
2. an epigraph solve (minimize s subject to |log λ_j(Y_i inv(X))| ≤ s) by SLSQP in
   log-Cholesky coordinates, which keep every candidate positive definite;
3. coordinate descent over (a, b, c) with a halving step, until the step is below 1e-5.

Only the best candidate seen is kept, so every stage can only lower the returned cost.
"""


from __future__ import annotations

from typing import TYPE_CHECKING

from loguru import logger
import numpy as np
from scipy.optimize import minimize

from spdmidrange.core.spd.matrix import SpdMatrix, make_spd
from spdmidrange.core.util.errors import WrongDimension

if TYPE_CHECKING:
    from spdmidrange.core.clustering.dataset import Dataset


_GRID_POINTS: int = 50
_MIN_STEP: float = 1e-5
_MAX_DESCENT_MOVES: int = 100_000


def _pencil_log_extremes(abc: np.ndarray, pqr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """log λ_min, log λ_max of Y_j inv(X_i) for candidates `abc` (..., 3) against data `pqr` (N, 3).

    Results have shape (..., N); infeasible candidates give NaN.
    """
    a, b, c = (abc[..., i, np.newaxis] for i in range(3))
    p, q, r = pqr[:, 0], pqr[:, 1], pqr[:, 2]

    det_x: np.ndarray = a * c - b * b
    det_y: np.ndarray = p * r - q * q
    trace: np.ndarray = a * r + c * p - 2 * b * q
    root: np.ndarray = np.sqrt(np.maximum(trace * trace - 4 * det_x * det_y, 0.0))

    with np.errstate(divide='ignore', invalid='ignore'):
        lam_max: np.ndarray = (trace + root) / (2 * det_x)
        # product of the roots is det(Y)/det(X)
        lam_min: np.ndarray = 2 * det_y / (trace + root)
        return np.log(lam_min), np.log(lam_max)


def _cost(abc: np.ndarray, pqr: np.ndarray) -> np.ndarray:
    """Midrange cost of every candidate in `abc` (..., 3); +inf off the SPD cone."""
    a, b, c = abc[..., 0], abc[..., 1], abc[..., 2]
    feasible: np.ndarray = (a > 0) & (c > 0) & (a * c - b * b > 0)

    log_min, log_max = _pencil_log_extremes(abc, pqr)
    with np.errstate(invalid='ignore'):
        cost: np.ndarray = np.max(np.maximum(log_max, -log_min), axis=-1)
    return np.where(feasible & np.isfinite(cost), cost, np.inf)


def _from_log_cholesky(z: np.ndarray) -> np.ndarray:
    """(a, b, c) of L L.T with L = [[exp(u), 0], [v, exp(w)]]."""
    u, v, w = z[0], z[1], z[2]
    return np.array([np.exp(2 * u), v * np.exp(u), v * v + np.exp(2 * w)])


def _to_log_cholesky(abc: np.ndarray) -> np.ndarray:
    a, b, c = abc
    l11: float = np.sqrt(a)
    l21: float = b / l11
    return np.array([np.log(l11), l21, 0.5 * np.log(c - l21 * l21)])


def _grid_search(pqr: np.ndarray) -> np.ndarray:
    a_axis: np.ndarray = np.linspace(pqr[:, 0].min(), pqr[:, 0].max(), _GRID_POINTS)
    c_axis: np.ndarray = np.linspace(pqr[:, 2].min(), pqr[:, 2].max(), _GRID_POINTS)
    # open interval: the endpoints are singular
    u_axis: np.ndarray = np.linspace(-1, 1, _GRID_POINTS + 2)[1:-1]

    a, c, u = np.meshgrid(a_axis, c_axis, u_axis, indexing='ij')
    candidates: np.ndarray = np.stack([a, u * np.sqrt(a * c), c], axis=-1).reshape(-1, 3)

    costs: np.ndarray = _cost(candidates, pqr)
    return candidates[int(np.argmin(costs))]


def _epigraph_polish(start: np.ndarray, pqr: np.ndarray) -> np.ndarray:
    z0: np.ndarray = np.append(_to_log_cholesky(start), float(_cost(start, pqr)))

    def constraints(z: np.ndarray) -> np.ndarray:
        log_min, log_max = _pencil_log_extremes(_from_log_cholesky(z[:3]), pqr)
        return np.concatenate([z[3] - log_max, z[3] + log_min])

    result = minimize(lambda z: z[3], z0, method='SLSQP',
                      constraints=[{'type': 'ineq', 'fun': constraints}],
                      options={'ftol': 1e-12, 'maxiter': 1000})
    if not np.all(np.isfinite(result.x)):
        logger.debug(f'Oracle epigraph polish diverged ({result.message}), keeping grid optimum')
        return start
    return _from_log_cholesky(result.x[:3])


def _coordinate_descent(start: np.ndarray, pqr: np.ndarray, step: float) -> np.ndarray:
    best: np.ndarray = start.copy()
    best_cost: float = float(_cost(best, pqr))

    moves: int = 0
    while step >= _MIN_STEP and moves < _MAX_DESCENT_MOVES:
        improved: bool = False
        for axis in range(3):
            for sign in (1.0, -1.0):
                trial: np.ndarray = best.copy()
                trial[axis] += sign * step
                trial_cost: float = float(_cost(trial, pqr))
                if trial_cost < best_cost:
                    best, best_cost, improved = trial, trial_cost, True
                    moves += 1
        if not improved:
            step /= 2

    return best


def optimization_midrange_2d(data: Dataset) -> SpdMatrix:
    """Return a minimizer of max_i d∞(X, Y_i) over 2x2 SPD matrices X."""
    if data.require_nonempty().dim != 2:
        raise WrongDimension(f'*** OPTIMIZATION MIDRANGE ORACLE NEEDS 2x2 DATA, GOT {data.dim}x{data.dim} ***')

    if len(data) == 1:
        return data[0]

    stack: np.ndarray = data.stack
    pqr: np.ndarray = np.stack([stack[:, 0, 0], stack[:, 0, 1], stack[:, 1, 1]], axis=-1)

    grid_best: np.ndarray = _grid_search(pqr)
    polished: np.ndarray = _epigraph_polish(grid_best, pqr)

    # each stage only replaces the incumbent when it is strictly better
    start: np.ndarray = min((grid_best, polished), key=lambda abc: float(_cost(abc, pqr)))
    spacing: float = float(np.ptp(pqr[:, [0, 2]])) / _GRID_POINTS or 1e-2
    best: np.ndarray = _coordinate_descent(start, pqr, step=spacing)

    logger.debug(f'Optimization midrange: grid cost {float(_cost(grid_best, pqr)):.6f}, '
                 f'polished {float(_cost(polished, pqr)):.6f}, final {float(_cost(best, pqr)):.6f}')

    a, b, c = best.tolist()
    return make_spd(np.array([[a, b], [b, c]]))
