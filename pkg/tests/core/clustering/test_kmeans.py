from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from spdmidrange import ClusterModel, Dataset, InitStrategy, SpdMatrix, congruence, kmeans, make_spd, make_stream, \
    run_stream, score_accuracy, thompson_distance
from spdmidrange.core.clustering.kmeans import assign_to_nearest, imr_centroid
from spdmidrange.core.util.errors import KTooLarge, SpdValidationError
from spdmidrange.experiments.generators import ExperimentConfig, gen_clustered_dataset


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def _two_blobs(sphere_blob) -> Dataset:
    far: SpdMatrix = make_spd(np.diag(np.exp([2.0, 1.0, -2.0])))
    return Dataset.of([*sphere_blob(make_spd(np.eye(3)), 6, seed=1), *sphere_blob(far, 6, seed=2)])


def test_single_cluster_is_the_imr_of_everything(random_spd):
    data: Dataset = Dataset.of([random_spd(3, seed=s) for s in range(7)])
    model: ClusterModel = kmeans(data, 1, rng=make_stream(1))

    assert model.assignment == [0] * 7
    assert model.converged
    np.testing.assert_array_equal(model.centroids[0].entries, imr_centroid(data, range(7)).entries)


@pytest.mark.parametrize('seed', range(5))
def test_pairs_of_identical_matrices(random_spd, seed: int):
    a: SpdMatrix = random_spd(2, seed=1)
    b: SpdMatrix = random_spd(2, seed=2, spread=3.0)
    model: ClusterModel = kmeans(Dataset.of([a, a, b, b]), 2, rng=make_stream(seed))

    labels: list[int] = model.assignment
    assert labels[0] == labels[1] != labels[2] == labels[3]
    np.testing.assert_allclose(model.centroids[labels[0]].entries, a.entries, rtol=1e-10)
    np.testing.assert_allclose(model.centroids[labels[2]].entries, b.entries, rtol=1e-10)


@pytest.mark.parametrize('init', list(InitStrategy))
def test_separated_blobs_are_recovered(sphere_blob, init: InitStrategy):
    data: Dataset = _two_blobs(sphere_blob)
    model: ClusterModel = kmeans(data, 2, init=[data[0], data[6]])

    assert len(set(model.assignment[:6])) == len(set(model.assignment[6:])) == 1
    assert model.assignment[0] != model.assignment[6]
    # every strategy at least terminates with k nonempty clusters
    other: ClusterModel = kmeans(data, 2, init=init, rng=make_stream(3))
    assert all(other.clusters())


def test_centroids_are_imr_of_final_clusters(sphere_blob):
    data: Dataset = _two_blobs(sphere_blob)
    model: ClusterModel = kmeans(data, 2, rng=make_stream(4))

    for mu, members in zip(model.centroids, model.clusters()):
        assert thompson_distance(mu, imr_centroid(data, members)) <= 1e-3


@settings(max_examples=500, deadline=None)
@given(s1=seeds, s2=seeds, s3=seeds)
def test_congruence_leaves_labels_unchanged(sphere_blob, random_transform, s1: int, s2: int, s3: int):
    far: SpdMatrix = make_spd(np.diag(np.exp([3.0, 1.5, -3.0])))
    data: Dataset = Dataset.of([*sphere_blob(make_spd(np.eye(3)), 6, seed=s1), *sphere_blob(far, 6, seed=s2)])
    g: np.ndarray = random_transform(3, seed=s3)
    moved: Dataset = Dataset.of([congruence(p, g) for p in data])

    labels: list[int] = kmeans(data, 2, imr_iters=100, rng=make_stream(s3)).assignment
    assert kmeans(moved, 2, imr_iters=100, rng=make_stream(s3)).assignment == labels
    assert len(set(labels[:6])) == len(set(labels[6:])) == 1


@settings(max_examples=500, deadline=None)
@given(seed=seeds)
def test_same_seed_gives_the_same_model(seed: int):
    cfg = ExperimentConfig(dim=2, n_points=12, n_clusters=3)
    data: Dataset = gen_clustered_dataset(cfg, run_stream(seed, 0))
    first: ClusterModel = kmeans(data, 3, init=InitStrategy.KMEANS_PP, imr_iters=50, rng=make_stream(seed))
    second: ClusterModel = kmeans(data, 3, init=InitStrategy.KMEANS_PP, imr_iters=50, rng=make_stream(seed))

    assert first.assignment == second.assignment
    for a, b in zip(first.centroids, second.centroids):
        np.testing.assert_array_equal(a.entries, b.entries)


def test_empty_cluster_is_reseeded(sphere_blob):
    data: Dataset = _two_blobs(sphere_blob)
    model: ClusterModel = kmeans(data, 2, init=[data[0], data[0]])

    assert all(model.clusters())


def test_assignment_ties_go_to_the_lowest_centroid(random_spd):
    a: SpdMatrix = random_spd(2, seed=1)

    assert assign_to_nearest(Dataset.of([a, random_spd(2, seed=2)]), [a, a]) == [0, 0]


def test_invalid_arguments(random_spd):
    data: Dataset = Dataset.of([random_spd(2, seed=s) for s in range(3)])

    with pytest.raises(KTooLarge):
        kmeans(data, 4)
    with pytest.raises(SpdValidationError):
        kmeans(data, 2, init=[data[0]])
    with pytest.raises(ValueError):
        kmeans(data, 2, init='farthest_first')


@pytest.mark.slow
def test_seeding_one_point_per_true_cluster():
    cfg = ExperimentConfig(seed=21, dim=5)
    data: Dataset = gen_clustered_dataset(cfg, run_stream(cfg.seed, 0))
    model: ClusterModel = kmeans(data, 10, init=[data[20 * c] for c in range(10)])

    assert score_accuracy(model, data.labels).points_identified >= 195
