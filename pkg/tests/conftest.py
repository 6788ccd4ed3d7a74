import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cmchordal import Graph, complete_graph, cycle_graph, path_graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def P4():
    return path_graph(4)


@pytest.fixture
def C4():
    return cycle_graph(4)


@pytest.fixture
def K3():
    return complete_graph(3)


@pytest.fixture
def star():
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
