from collections.abc import Callable

import numpy as np
import pytest

from spdmidrange import Dataset, SpdMatrix, make_spd, matrix_exp, sphere_sample


type SpdFactory = Callable[..., SpdMatrix]
type TransformFactory = Callable[[int, int], np.ndarray]


def _symmetric(rng: np.random.Generator, dim: int) -> np.ndarray:
    g: np.ndarray = rng.standard_normal((dim, dim))
    return (g + g.T) / 2


@pytest.fixture(scope='session')
def random_spd() -> SpdFactory:
    """Factory (dim, seed, spread=1.0) -> exp(S) with log-eigenvalues spread about ±spread."""

    def make(dim: int, seed: int, spread: float = 1.0) -> SpdMatrix:
        rng = np.random.default_rng(seed)
        s: np.ndarray = _symmetric(rng, dim)
        return matrix_exp(spread * s / max(1.0, float(np.max(np.abs(np.linalg.eigvalsh(s))))))

    return make


@pytest.fixture(scope='session')
def random_transform() -> TransformFactory:
    """Factory (dim, seed) -> invertible G = Q1 diag(exp(u)) Q2 with |u| <= 1."""

    def make(dim: int, seed: int) -> np.ndarray:
        rng = np.random.default_rng(seed)
        q1, _ = np.linalg.qr(rng.standard_normal((dim, dim)))
        q2, _ = np.linalg.qr(rng.standard_normal((dim, dim)))
        return q1 @ np.diag(np.exp(rng.uniform(-1, 1, dim))) @ q2

    return make


@pytest.fixture(scope='session')
def example_data() -> Dataset:
    return Dataset.of([make_spd([[0.95, -0.6], [-0.6, 1.1]]),
                       make_spd([[1.0, 0.5], [0.5, 2.1]]),
                       make_spd([[2.5, -0.2], [-0.2, 1.2]])])


@pytest.fixture(scope='session')
def sphere_blob() -> Callable[..., Dataset]:
    """Factory (center, n, seed, radius=0.2) -> n points on the d∞-sphere around `center`."""

    def make(center: SpdMatrix, n: int, seed: int, radius: float = 0.2) -> Dataset:
        rng = np.random.default_rng(seed)
        return Dataset.of(sphere_sample(center, radius, rng).point for _ in range(n))

    return make
