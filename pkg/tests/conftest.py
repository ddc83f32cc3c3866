import numpy as np
import pytest

from asc_maxcut.graphs import WeightedGraph


@pytest.fixture
def triangle():
    # w01 = 1, w02 = 2, w12 = 3
    return WeightedGraph.from_edge_weights(3, [1.0, 2.0, 3.0])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
