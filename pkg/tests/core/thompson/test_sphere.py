import numpy as np
import pytest

from spdmidrange import SpdMatrix, SphereSample, make_spd, make_stream, sphere_sample, thompson_distance
from spdmidrange.core.util.errors import DegenerateDirection, SpdValidationError


@pytest.mark.parametrize('dim', [2, 5, 20])
@pytest.mark.parametrize('radius', [0.2, 1.0, 3.0])
def test_samples_lie_on_the_sphere(random_spd, dim: int, radius: float):
    center: SpdMatrix = random_spd(dim, seed=dim)
    rng = make_stream(dim)

    for _ in range(20):
        sample: SphereSample = sphere_sample(center, radius, rng)
        assert sample.center is center
        assert thompson_distance(center, sample.point) == pytest.approx(radius, abs=1e-8)


def test_samples_around_identity_spread_out():
    identity: SpdMatrix = make_spd(np.eye(3))
    rng = make_stream(1)
    points: list[SpdMatrix] = [sphere_sample(identity, 0.5, rng).point for _ in range(10)]

    assert min(thompson_distance(p, q) for i, p in enumerate(points) for q in points[i + 1:]) > 0


def test_sampling_is_deterministic_under_seed(random_spd):
    center: SpdMatrix = random_spd(4, seed=5)

    np.testing.assert_array_equal(sphere_sample(center, 0.2, make_stream(9)).point.entries,
                                  sphere_sample(center, 0.2, make_stream(9)).point.entries)


@pytest.mark.parametrize('radius', [0.0, -1.0])
def test_radius_must_be_positive(radius: float):
    with pytest.raises(SpdValidationError):
        sphere_sample(make_spd(np.eye(2)), radius, make_stream(0))


def test_one_dimensional_directions_are_degenerate():
    with pytest.raises(DegenerateDirection):
        sphere_sample(make_spd([[2.0]]), 0.2, make_stream(0))
