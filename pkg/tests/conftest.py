import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from treeprofile.tree import from_edge_list  # noqa: E402

# spine 0..4, legs 5, 6, 7 on spine vertices 1, 2, 3
CAT3_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7)]
# center 0, arms 0-1-2, 0-3-4, 0-5-6
SUBDIVIDED_STAR_EDGES = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]


@pytest.fixture
def cat3():
    return from_edge_list(CAT3_EDGES)


@pytest.fixture
def sub_star():
    return from_edge_list(SUBDIVIDED_STAR_EDGES)


def path_tree(n):
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def star_tree(leaves):
    """K_{1,leaves} with center 0."""
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
