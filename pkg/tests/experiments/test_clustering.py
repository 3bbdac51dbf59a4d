import pytest

from spdmidrange import BicLikelihood
from spdmidrange.experiments.clustering import experiment_kmeanspp, experiment_xmeans
from spdmidrange.experiments.generators import ExperimentConfig


def _mean_rows(csv: str) -> dict[int, list[float]]:
    rows: list[list[str]] = [line.split(',') for line in csv.splitlines() if not line.startswith('#')][1:]
    return {int(row[0]): [float(v) for v in row[2:]] for row in rows if row[1] == 'mean'}


def test_table_layout():
    cfg = ExperimentConfig(seed=1, n_points=12, n_clusters=3, runs=2)
    csv: str = experiment_kmeanspp(cfg, dims=[2])
    lines: list[str] = [line for line in csv.splitlines() if not line.startswith('#')]

    assert lines[0] == 'd,run,points_identified,clusters_identified,clusters_lost,k_found'
    assert [line.split(',')[:2] for line in lines[1:]] == [['2', '0'], ['2', '1'], ['2', 'mean']]
    assert all(line.split(',')[5] in ('3', '3.0') for line in lines[1:])
    assert csv == experiment_kmeanspp(cfg, dims=[2])


def test_xmeans_header_names_the_likelihood():
    cfg = ExperimentConfig(seed=1, n_points=12, n_clusters=3, runs=1)

    assert 'likelihood=manifold' in experiment_xmeans(cfg, dims=[2]).splitlines()[0]
    assert 'likelihood=scalar' in experiment_xmeans(cfg, dims=[2], likelihood=BicLikelihood.SCALAR).splitlines()[0]


@pytest.mark.slow
def test_kmeanspp_accuracy():
    means: dict[int, list[float]] = _mean_rows(experiment_kmeanspp(ExperimentConfig(seed=3, runs=20), dims=[5]))

    assert means[5][0] == pytest.approx(190.5, abs=10)


@pytest.mark.slow
@pytest.mark.parametrize('dim', [2, 5, 10, 20])
def test_kmeanspp_accuracy_band(dim: int):
    means: dict[int, list[float]] = _mean_rows(experiment_kmeanspp(ExperimentConfig(seed=3, runs=20), dims=[dim]))
    points, _, lost, k_found = means[dim]

    assert points >= 175
    assert lost <= 1.5
    assert k_found == 10


@pytest.mark.slow
def test_xmeans_accuracy_in_high_dimension():
    means: dict[int, list[float]] = _mean_rows(experiment_xmeans(ExperimentConfig(seed=3, runs=20), dims=[20]))
    points, clusters, lost, _ = means[20]

    assert points == pytest.approx(200.0, abs=5)
    assert clusters == pytest.approx(10.0, abs=1)
    assert lost == pytest.approx(0.0, abs=0.5)


@pytest.mark.slow
def test_xmeans_accuracy_in_the_plane():
    means: dict[int, list[float]] = _mean_rows(experiment_xmeans(ExperimentConfig(seed=3, runs=20), dims=[2]))

    assert means[2][0] >= 80


@pytest.mark.slow
def test_scalar_likelihood_misses_the_high_dimension_band():
    # the K (D + 1) penalty outgrows a likelihood gain that does not scale with D, so no split is kept
    csv: str = experiment_xmeans(ExperimentConfig(seed=3, runs=2), dims=[20], likelihood=BicLikelihood.SCALAR)
    points, _, _, k_found = _mean_rows(csv)[20]

    assert points < 190
    assert k_found < 10
