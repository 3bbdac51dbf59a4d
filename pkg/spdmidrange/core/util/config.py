"""
=====================================
NUMERICAL & EXPERIMENT CONFIGURATIONS
=====================================
"""


import os

from dotenv import load_dotenv


load_dotenv(dotenv_path='.env', override=True)


def _env_float(name: str, default: float) -> float:
    return float(os.environ.get(f'SPDMIDRANGE_{name}', default))


def _env_int(name: str, default: int) -> int:
    return int(os.environ.get(f'SPDMIDRANGE_{name}', default))


class SpdConfig:
    """
    Configuration class for numerical tolerances, iteration caps and algorithm defaults.
    Every value can be set through a `SPDMIDRANGE_<ATTRIBUTE>` environment variable (or `.env` file),
    and can be overridden by user setting SpdConfig.<attribute>.
    """

    # SPD validation
    SYMMETRY_TOL: float = _env_float('SYMMETRY_TOL', 1e-9)  # relative to max |entry|

    # extremal generalized eigenvalues
    DENSE_EIG_MAX_DIM: int = _env_int('DENSE_EIG_MAX_DIM', 32)  # above this, use the iterative extremal solver
    ITERATIVE_EIG_TOL: float = _env_float('ITERATIVE_EIG_TOL', 1e-12)
    ITERATIVE_EIG_MAX_ITERS: int = _env_int('ITERATIVE_EIG_MAX_ITERS', 10_000)

    # Nussbaum geodesic: relative eigenvalue gap below which the limit branch is used
    DEGENERACY_REL_GAP: float = _env_float('DEGENERACY_REL_GAP', 1e-12)

    # inductive midrange
    IMR_NUM_ITERS: int = _env_int('IMR_NUM_ITERS', 10_000)
    IMR_EARLY_STOP_TOL: float = _env_float('IMR_EARLY_STOP_TOL', 1e-12)
    IMR_EARLY_STOP_PATIENCE: int = _env_int('IMR_EARLY_STOP_PATIENCE', 100)
    ACTIVE_BURN_IN_FRACTION: float = _env_float('ACTIVE_BURN_IN_FRACTION', 0.5)

    # clustering
    CLUSTER_IMR_ITERS: int = _env_int('CLUSTER_IMR_ITERS', 500)
    KMEANS_MAX_ROUNDS: int = _env_int('KMEANS_MAX_ROUNDS', 100)
    XMEANS_MAX_SPLITS: int = _env_int('XMEANS_MAX_SPLITS', 3)
    XMEANS_SPLIT_RADIUS_FACTOR: float = _env_float('XMEANS_SPLIT_RADIUS_FACTOR', 0.5)

    # random generation
    SPHERE_MAX_ATTEMPTS: int = _env_int('SPHERE_MAX_ATTEMPTS', 100)
    CENTER_MAX_ATTEMPTS: int = _env_int('CENTER_MAX_ATTEMPTS', 100_000)
    DEFAULT_SEED: int = _env_int('SEED', 7 * 17 * 14717)

    # convergence-rate fitting window over iteration index k
    SLOPE_FIT_MIN_K: int = _env_int('SLOPE_FIT_MIN_K', 10)
    SLOPE_FIT_MAX_K: int = _env_int('SLOPE_FIT_MAX_K', 1_000)

    # work pool for independent runs
    MAX_WORKERS: int = _env_int('MAX_WORKERS', os.cpu_count() or 1)
