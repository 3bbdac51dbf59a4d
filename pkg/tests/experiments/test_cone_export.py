from math import hypot

import numpy as np
import pytest

from spdmidrange import ActiveDataReport, Dataset, ImrConfig, inductive_midrange, make_spd
from spdmidrange.core.util.errors import WrongDimension
from spdmidrange.experiments.cone_export import export_cone_csv


def test_identity_row():
    rows: list[str] = export_cone_csv(Dataset.of([make_spd(np.eye(2))])).splitlines()

    assert rows[0] == 'x,y,z,kind,index,role'
    assert rows[1] == '0,0,1.4142135623730951,data,0,'


def test_rows_lie_inside_the_cone(example_data: Dataset):
    _, trace = inductive_midrange(example_data, ImrConfig(num_iters=50, record_trace=True))
    report = ActiveDataReport(active=frozenset({0, 1}), external=frozenset({0, 1, 2}), internal=frozenset())
    rows: list[list[str]] = [line.split(',') for line in export_cone_csv(example_data, trace, report).splitlines()[1:]]

    assert len(rows) == 3 + 51
    assert [row[5] for row in rows[:3]] == ['active', 'active', 'external']
    assert {row[3] for row in rows[3:]} == {'iterate'}
    for x, y, z, *_ in rows:
        assert float(z) > hypot(float(x), float(y))


def test_only_2x2_data(random_spd):
    with pytest.raises(WrongDimension):
        export_cone_csv(Dataset.of([random_spd(3, seed=1)]))
