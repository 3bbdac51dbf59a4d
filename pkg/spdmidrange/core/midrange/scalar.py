"""
================
SCALAR MIDRANGES
================

The real-line inductive midrange: from any x_1, step x_{k+1} = x_k + (y_k↑ - x_k)/(k + 1) toward the
value y_k↑ farthest from x_k. The sequence converges to (min + max)/2 at rate O(1/k),
which makes it the validation path for the matrix algorithm.
"""


from collections.abc import Sequence
from math import sqrt

import numpy as np

from spdmidrange.core.util.errors import EmptyInput


def scalar_inductive_midrange_path(values: Sequence[float], init: float, num_iters: int) -> np.ndarray:
    """Return the iterates x_1, ..., x_{num_iters + 1}."""
    if not len(values):
        raise EmptyInput('*** SCALAR MIDRANGE NEEDS AT LEAST ONE VALUE ***')

    ys: list[float] = [float(y) for y in values]
    # the farthest value is always an extreme; ties go to the lower index
    i_min: int = min(range(len(ys)), key=ys.__getitem__)
    i_max: int = max(range(len(ys)), key=lambda i: (ys[i], -i))
    y_min, y_max = ys[i_min], ys[i_max]

    path: np.ndarray = np.empty(num_iters + 1)
    x: float = float(init)
    path[0] = x
    for k in range(1, num_iters + 1):
        d_min, d_max = abs(x - y_min), abs(x - y_max)
        target: float = y_max if d_max > d_min or (d_max == d_min and i_max < i_min) else y_min
        x += (target - x) / (k + 1)
        path[k] = x

    return path


def scalar_inductive_midrange(values: Sequence[float], init: float, num_iters: int) -> float:
    """Return the scalar inductive midrange after `num_iters` steps, approximately (min + max)/2."""
    return float(scalar_inductive_midrange_path(values, init, num_iters)[-1])


def scalar_geometric_midrange(values: Sequence[float]) -> float:
    """Return √(y_min y_max), the scaling-invariant midrange of positive scalars."""
    if not len(values):
        raise EmptyInput('*** SCALAR MIDRANGE NEEDS AT LEAST ONE VALUE ***')
    return sqrt(min(values) * max(values))
