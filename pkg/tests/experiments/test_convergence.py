from math import exp

import numpy as np
import pytest

from spdmidrange import Dataset, make_spd
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdValidationError
from spdmidrange.experiments.convergence import convergence_slope, experiment_convergence, fit_window, loglog_slope
from spdmidrange.experiments.generators import ExperimentConfig


def _rows(csv: str) -> list[list[str]]:
    return [line.split(',') for line in csv.splitlines() if not line.startswith('#')][1:]


def test_fit_window():
    assert fit_window(10_000) == (10, 1_000)
    assert fit_window(500) == (10, 50)
    with pytest.raises(SpdValidationError):
        fit_window(100)


def test_loglog_slope():
    ks: np.ndarray = np.arange(1.0, 100.0)

    assert loglog_slope(ks, 3 / ks) == pytest.approx(-1.0)
    assert loglog_slope(ks, np.where(ks > 50, 0.0, ks ** -2)) == pytest.approx(-2.0)
    assert np.isnan(loglog_slope(ks[:1], ks[:1]))


def test_scalar_embedding_converges_at_rate_one():
    # 1x1 matrices follow the scalar recursion in log-space; the start sits halfway to the low end
    data: Dataset = Dataset.of([make_spd([[exp(v)]]) for v in (-0.5, -1.0, 1.0, 0.3, -0.2)])

    assert convergence_slope(data, 10_000) == pytest.approx(-1.0, abs=0.02)


def test_table_layout():
    cfg = ExperimentConfig(seed=4, n_clusters=1, num_iters=200, runs=3)
    rows: list[list[str]] = _rows(experiment_convergence(cfg, [(2, 3), (3, 4)]))

    assert [row[:3] for row in rows] == [['2', '3', '0'], ['2', '3', '1'], ['2', '3', '2'], ['2', '3', 'mean'],
                                         ['3', '4', '0'], ['3', '4', '1'], ['3', '4', '2'], ['3', '4', 'mean']]
    assert experiment_convergence(cfg, [(2, 3)]) == experiment_convergence(cfg, [(2, 3)])


@pytest.mark.slow
@pytest.mark.parametrize('dim, n', [(5, 5), (5, 20)])
def test_mean_slope_is_minus_one(dim: int, n: int):
    cfg = ExperimentConfig(seed=1, n_clusters=1, num_iters=10_000, runs=10)
    mean_row: list[str] = _rows(experiment_convergence(cfg, [(dim, n)]))[-1]

    assert float(mean_row[3]) == pytest.approx(-1.0, abs=0.05)


@pytest.mark.slow
@pytest.mark.parametrize('n', [5, 20])
def test_mean_slope_is_minus_one_for_large_matrices(monkeypatch, n: int):
    # full spectra on the batched dense path give the same extremes as the iterative solver
    monkeypatch.setattr(SpdConfig, 'DENSE_EIG_MAX_DIM', 64)
    cfg = ExperimentConfig(seed=1, n_clusters=1, num_iters=10_000, runs=3)
    mean_row: list[str] = _rows(experiment_convergence(cfg, [(50, n)]))[-1]

    assert mean_row[:3] == ['50', str(n), 'mean']
    assert float(mean_row[3]) == pytest.approx(-1.0, abs=0.05)
