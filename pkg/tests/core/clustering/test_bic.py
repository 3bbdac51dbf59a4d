from math import inf

import numpy as np
import pytest

from spdmidrange import BicLikelihood, BicScore, ClusterModel, Dataset, SpdMatrix, bic_score, kmeans, make_spd, \
    make_stream, thompson_distance
from spdmidrange.core.clustering.kmeans import imr_centroid
from spdmidrange.core.util.errors import EmptyCluster, LengthMismatch


def test_identical_points_have_zero_variance(random_spd):
    a: SpdMatrix = random_spd(2, seed=1)
    score: BicScore = bic_score(Dataset.of([a, a, a]), [0, 0, 0], [a])

    assert score.zero_variance
    assert score.value == inf


def test_splitting_two_far_blobs_raises_the_score(sphere_blob):
    data: Dataset = Dataset.of([*sphere_blob(make_spd(np.eye(2)), 5, seed=1),
                                *sphere_blob(make_spd(np.diag([np.e ** 3, np.e ** -1])), 5, seed=2)])
    whole: SpdMatrix = imr_centroid(data, range(10))
    halves: list[SpdMatrix] = [imr_centroid(data, range(5)), imr_centroid(data, range(5, 10))]

    for likelihood in BicLikelihood:
        unsplit: BicScore = bic_score(data, [0] * 10, [whole], likelihood)
        split: BicScore = bic_score(data, [0] * 5 + [1] * 5, halves, likelihood)
        assert split > unsplit
        assert not split.zero_variance


def test_likelihoods_agree_only_for_scalars(random_spd):
    scalars: Dataset = Dataset.of([make_spd([[v]]) for v in (1.0, 2.0, 3.0, 5.0)])
    mu: SpdMatrix = make_spd([[2.2]])
    assert bic_score(scalars, [0] * 4, [mu], 'manifold').value == pytest.approx(
        bic_score(scalars, [0] * 4, [mu], 'scalar').value)

    data: Dataset = Dataset.of([random_spd(3, seed=s) for s in range(4)])
    assert bic_score(data, [0] * 4, [data[0]], 'manifold').value != bic_score(data, [0] * 4, [data[0]], 'scalar').value


def test_score_matches_closed_form():
    data: Dataset = Dataset.of([make_spd([[np.e]]), make_spd([[np.e ** -1]])])
    mu: SpdMatrix = make_spd([[1.0]])

    # both points at distance 1: σ² = 1, ll = -n/2, p = 2
    assert bic_score(data, [0, 0], [mu]).value == pytest.approx(-1.0 - np.log(2.0), abs=1e-12)


def test_invalid_partitions(random_spd):
    data: Dataset = Dataset.of([random_spd(2, seed=s) for s in range(3)])

    with pytest.raises(LengthMismatch):
        bic_score(data, [0, 0], [data[0]])
    with pytest.raises(EmptyCluster):
        bic_score(data, [0, 0, 0], [data[0], data[1]])


def test_empty_cluster_is_reported_behind_a_zero_variance_one(random_spd):
    a: SpdMatrix = random_spd(2, seed=1)

    with pytest.raises(EmptyCluster):
        bic_score(Dataset.of([a, a]), [0, 0], [a, random_spd(2, seed=2)])


def test_scalar_likelihood_is_the_default(random_spd):
    data: Dataset = Dataset.of([random_spd(3, seed=s) for s in range(6)])
    assignment: list[int] = [0, 0, 0, 1, 1, 1]
    centroids: list[SpdMatrix] = [imr_centroid(data, range(3)), imr_centroid(data, range(3, 6))]

    assert bic_score(data, assignment, centroids) == bic_score(data, assignment, centroids, BicLikelihood.SCALAR)

    # σ² = (1/n) Σ d², ll = -n log σ - n/2 + n log(n/N), p = K (D + 1)
    expected: float = -2 * (6 + 1) / 2 * np.log(6)
    for j in range(2):
        dists: np.ndarray = np.array([thompson_distance(data[i], centroids[j]) for i in range(3 * j, 3 * j + 3)])
        expected += -3 * 0.5 * np.log(np.mean(dists ** 2)) - 1.5 + 3 * np.log(0.5)
    assert bic_score(data, assignment, centroids).value == pytest.approx(expected, rel=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize('likelihood', list(BicLikelihood))
def test_splitting_one_blob_lowers_the_score(random_spd, sphere_blob, likelihood: BicLikelihood):
    lowered: int = 0
    for seed in range(50):
        blob: Dataset = sphere_blob(random_spd(5, seed=seed), 20, seed=seed)
        whole: ClusterModel = kmeans(blob, 1, rng=make_stream(seed))
        split: ClusterModel = kmeans(blob, 2, rng=make_stream(seed))

        if all(split.clusters()):
            lowered += bic_score(blob, whole.assignment, whole.centroids, likelihood) > \
                bic_score(blob, split.assignment, split.centroids, likelihood)

    assert lowered >= 45
