from math import log

import numpy as np
import pytest

from spdmidrange import Dataset, ImrConfig, SpdMatrix, imr_cost, inductive_midrange, loewner_leq, make_spd, \
    optimization_midrange_2d, thompson_distance
from spdmidrange.core.util.errors import EmptyDataset, WrongDimension


def test_worked_example(example_data: Dataset):
    optimum: SpdMatrix = optimization_midrange_2d(example_data)

    np.testing.assert_allclose(optimum.entries, [[1.32, -0.53], [-0.53, 1.62]], atol=0.02)
    assert imr_cost(optimum, example_data) == pytest.approx(0.790, abs=0.005)


def test_separation_from_imr(example_data: Dataset):
    x, _ = inductive_midrange(example_data, ImrConfig(num_iters=10_000))

    assert thompson_distance(x, optimization_midrange_2d(example_data)) == pytest.approx(0.33, abs=0.01)


def test_singleton_returns_the_point():
    a: SpdMatrix = make_spd([[2.0, 0.3], [0.3, 1.0]])
    assert optimization_midrange_2d(Dataset.of([a])) is a


def test_aligned_diagonal_pair_costs_half_the_distance():
    data: Dataset = Dataset.of([make_spd(np.eye(2)), make_spd(np.diag([4.0, 9.0]))])

    # the per-diagonal geometric midranges diag(2, 3) reach cost log 3
    assert imr_cost(optimization_midrange_2d(data), data) == pytest.approx(log(3.0), abs=1e-3)


def test_oracle_never_loses_to_imr(random_spd):
    for seed in range(5):
        data: Dataset = Dataset.of([random_spd(2, seed=100 * seed + i) for i in range(6)])
        x, _ = inductive_midrange(data, ImrConfig(num_iters=2_000))

        assert imr_cost(optimization_midrange_2d(data), data) <= imr_cost(x, data) + 1e-3


def test_rejects_other_dimensions(random_spd):
    with pytest.raises(WrongDimension):
        optimization_midrange_2d(Dataset.of([random_spd(3, seed=1)]))
    with pytest.raises(EmptyDataset):
        optimization_midrange_2d(Dataset.of([]))


def test_optimum_satisfies_the_sandwich_constraints(example_data: Dataset):
    optimum: SpdMatrix = optimization_midrange_2d(example_data)
    xi: float = float(np.exp(imr_cost(optimum, example_data)))

    for y in example_data:
        assert loewner_leq(y.entries / xi, optimum, tol=1e-9)
        assert loewner_leq(optimum, xi * y.entries, tol=1e-9)
