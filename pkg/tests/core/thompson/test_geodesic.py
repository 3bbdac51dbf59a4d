from math import log

import numpy as np
import pytest

from spdmidrange import GeodesicWeight, SpdMatrix, geodesic_antipode, make_spd, matrix_power, riemannian_geodesic, \
    thompson_distance, thompson_geodesic
from spdmidrange.core.spd.linalg import gen_eig, gen_extremal_eig
from spdmidrange.core.util.errors import InvalidGeodesicWeight


def test_endpoints_are_returned_unchanged(random_spd):
    a: SpdMatrix = random_spd(3, seed=1)
    b: SpdMatrix = random_spd(3, seed=2)

    assert thompson_geodesic(a, b, 0) is a
    assert thompson_geodesic(a, b, 1) is b


@pytest.mark.parametrize('dim', [2, 5, 20])
def test_midpoint_is_equidistant(random_spd, dim: int):
    for seed in range(1000):
        a: SpdMatrix = random_spd(dim, seed=2 * seed)
        b: SpdMatrix = random_spd(dim, seed=2 * seed + 1)
        mid: SpdMatrix = thompson_geodesic(a, b, 0.5)
        half: float = thompson_distance(a, b) / 2

        assert thompson_distance(a, mid) == pytest.approx(half, abs=1e-9)
        assert thompson_distance(mid, b) == pytest.approx(half, abs=1e-9)


def test_2x2_midpoint_is_riemannian_geometric_mean(random_spd):
    for seed in range(1000):
        a: SpdMatrix = random_spd(2, seed=2 * seed)
        b: SpdMatrix = random_spd(2, seed=2 * seed + 1)

        np.testing.assert_allclose(thompson_geodesic(a, b, 0.5).entries, riemannian_geodesic(a, b, 0.5).entries,
                                   rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize('t', [0.1, 0.3, 0.75, 0.9])
def test_parameterization_is_proportional_to_distance(random_spd, t: float):
    a: SpdMatrix = random_spd(5, seed=3)
    b: SpdMatrix = random_spd(5, seed=4, spread=2.0)
    x: SpdMatrix = thompson_geodesic(a, b, t)

    assert thompson_distance(a, x) == pytest.approx(t * thompson_distance(a, b), abs=1e-9)
    assert thompson_distance(x, b) == pytest.approx((1 - t) * thompson_distance(a, b), abs=1e-9)


def test_geodesic_eigenvalues_stay_between_extremal_powers(random_spd):
    a: SpdMatrix = random_spd(6, seed=5)
    b: SpdMatrix = random_spd(6, seed=6, spread=2.0)
    pair = gen_extremal_eig(a, b)

    for t in (0.2, 0.5, 0.8):
        spectrum: np.ndarray = gen_eig(a, thompson_geodesic(a, b, t))
        assert spectrum[0] >= pair.lambda_min ** t * (1 - 1e-10)
        assert spectrum[-1] <= pair.lambda_max ** t * (1 + 1e-10)


def test_degenerate_pencil_scales_geometrically(random_spd):
    a: SpdMatrix = random_spd(4, seed=7)
    b: SpdMatrix = make_spd(3.0 * a.entries)

    np.testing.assert_allclose(thompson_geodesic(a, b, 0.5).entries, np.sqrt(3.0) * a.entries, rtol=1e-12)


@pytest.mark.parametrize('t', [-0.1, 1.1, float('nan')])
def test_weights_outside_unit_interval_are_rejected(random_spd, t: float):
    with pytest.raises(InvalidGeodesicWeight):
        thompson_geodesic(random_spd(2, seed=1), random_spd(2, seed=2), t)


def test_weight_value_object():
    assert GeodesicWeight.of(0.25).t == 0.25
    assert GeodesicWeight.of(GeodesicWeight(0.5)).t == 0.5
    with pytest.raises(InvalidGeodesicWeight):
        GeodesicWeight(2.0)


def test_antipode_mirrors_through_center():
    center: SpdMatrix = make_spd(np.eye(2))
    point: SpdMatrix = make_spd(np.diag([np.e, 1 / np.e]))

    np.testing.assert_allclose(geodesic_antipode(center, point).entries, np.diag([1 / np.e, np.e]), rtol=1e-12)


def test_antipode_is_equidistant(random_spd):
    center: SpdMatrix = random_spd(5, seed=8)
    point: SpdMatrix = random_spd(5, seed=9)

    assert thompson_distance(center, geodesic_antipode(center, point)) == pytest.approx(
        thompson_distance(center, point), abs=1e-9)
    assert thompson_distance(center, point) > log(1.0)


@pytest.mark.parametrize('dim', [2, 5, 20])
def test_scaled_endpoints_scale_the_midpoint(random_spd, dim: int):
    a: SpdMatrix = random_spd(dim, seed=30 + dim)
    b: SpdMatrix = random_spd(dim, seed=40 + dim, spread=2.0)
    mid: np.ndarray = thompson_geodesic(a, b, 0.5).entries

    scaled: np.ndarray = thompson_geodesic(make_spd(3.0 * a.entries), make_spd(0.5 * b.entries), 0.5).entries
    np.testing.assert_allclose(scaled, np.sqrt(1.5) * mid, rtol=1e-10, atol=1e-10 * np.linalg.norm(mid))


def test_nearly_proportional_endpoints(random_spd):
    # pencil spectrum {c, c (1 + 1e-6)}: a tiny gap, still on the non-degenerate branch
    a: SpdMatrix = random_spd(4, seed=7)
    root: np.ndarray = matrix_power(a, 0.5).entries
    c: float = 2.0
    b: SpdMatrix = make_spd(c * root @ np.diag([1.0, 1.0 + 1e-6, 1.0, 1.0]) @ root)

    pair = gen_extremal_eig(a, b)
    assert pair.lambda_max / pair.lambda_min == pytest.approx(1 + 1e-6, rel=1e-7)
    np.testing.assert_allclose(thompson_geodesic(a, b, 0.3).entries, c ** 0.3 * a.entries, rtol=0, atol=1e-5)
