import random

import pytest

from sigmax.graph import Graph

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return random.Random(20240617)


@pytest.fixture
def paw():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
