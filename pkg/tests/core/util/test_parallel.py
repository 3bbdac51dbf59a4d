import threading
import time

import pytest

from spdmidrange.core.util.parallel import in_worker, ordered_map


@pytest.mark.parametrize('max_workers', [1, 4])
def test_results_keep_input_order(max_workers: int):
    def slow_square(x: int) -> int:
        time.sleep(0.001 * (10 - x))
        return x * x

    assert ordered_map(slow_square, list(range(10)), max_workers=max_workers) == [x * x for x in range(10)]


def test_empty_and_single_inputs():
    assert ordered_map(str, []) == []
    assert ordered_map(str, [5], progress=True, desc='one') == ['5']


def test_errors_propagate():
    def fail(x: int) -> int:
        raise ZeroDivisionError(x)

    with pytest.raises(ZeroDivisionError):
        ordered_map(fail, [1, 2, 3], max_workers=2)


def test_nested_maps_run_on_the_calling_worker():
    def inner_threads(_: int) -> set[int]:
        outer: int = threading.get_ident()
        inner: list[int] = ordered_map(lambda _: threading.get_ident(), list(range(6)), max_workers=4)
        return {outer, *inner}

    # every inner item ran on the outer worker's own thread
    assert all(len(threads) == 1 for threads in ordered_map(inner_threads, list(range(4)), max_workers=4))
    assert not in_worker()
