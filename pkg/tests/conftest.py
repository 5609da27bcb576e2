import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from multispec.multigraph import Multigraph, complete_graph, cycle_graph, disjoint_union  # noqa: E402


@pytest.fixture
def k1():
    return Multigraph(1)


@pytest.fixture
def two_triangles():
    return disjoint_union(complete_graph(3), complete_graph(3))


@pytest.fixture
def c4():
    return cycle_graph(4)
