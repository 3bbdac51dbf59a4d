from math import sqrt

import numpy as np
import pytest

from spdmidrange import scalar_geometric_midrange, scalar_inductive_midrange
from spdmidrange.core.midrange.scalar import scalar_inductive_midrange_path
from spdmidrange.core.util.errors import EmptyInput


@pytest.mark.parametrize('init', [1.0, 2.0, 5.0, -40.0, 100.0])
def test_converges_to_midpoint_of_range(init: float):
    assert scalar_inductive_midrange([1.0, 2.0, 5.0], init=init, num_iters=100_000) == pytest.approx(3.0, abs=1e-4)


def test_singleton_stays_put():
    assert scalar_inductive_midrange([7.0], init=7.0, num_iters=1_000) == 7.0


def test_error_shrinks_like_one_over_k():
    values: list[float] = [0.3, -1.2, 4.4, 2.0]
    target: float = (min(values) + max(values)) / 2
    half_range: float = (max(values) - min(values)) / 2
    path: np.ndarray = scalar_inductive_midrange_path(values, init=9.0, num_iters=5_000)

    # path[k - 1] is x_k; k |x_k - x*| never exceeds max(|x_1 - x*|, half range)
    bound: float = max(abs(path[0] - target), half_range)
    for k in range(1, len(path) + 1):
        assert k * abs(path[k - 1] - target) <= bound * (1 + 1e-12)


def test_random_value_sets():
    rng = np.random.default_rng(17)
    for _ in range(100):
        values: np.ndarray = rng.uniform(-5, 5, size=rng.integers(1, 20))
        init: float = float(rng.choice(values))
        result: float = scalar_inductive_midrange(values.tolist(), init=init, num_iters=100_000)
        assert result == pytest.approx((values.min() + values.max()) / 2, abs=10 / 100_000)


def test_geometric_midrange():
    assert scalar_geometric_midrange([1.0, 4.0, 9.0]) == pytest.approx(3.0)
    assert scalar_geometric_midrange([2.0]) == 2.0
    assert scalar_geometric_midrange([0.5, 8.0, 1.0]) == pytest.approx(sqrt(4.0))


def test_empty_values_are_rejected():
    with pytest.raises(EmptyInput):
        scalar_inductive_midrange([], init=0.0, num_iters=10)
    with pytest.raises(EmptyInput):
        scalar_geometric_midrange([])
