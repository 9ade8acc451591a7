import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from eds_lab.tree import tree_from_parents

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def trees(draw, min_n=1, max_n=30):
    """Random labeled trees from a random parent array, then a random relabeling."""
    n = draw(st.integers(min_n, max_n))
    parents = [0] + [draw(st.integers(0, i - 1)) for i in range(1, n)]
    t = tree_from_parents(parents)
    perm = draw(st.permutations(range(n)))
    from eds_lab.tree import tree_from_edges

    return tree_from_edges(n, [(perm[u], perm[v]) for u, v in t.edges])


def nx_graph(t):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges)
    return g


@pytest.fixture
def nx():
    return pytest.importorskip("networkx")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.LINES:
            terminalreporter.write_line(line)
