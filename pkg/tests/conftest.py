"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from histree.graph import Graph


def net_graph() -> Graph:
    """Triangle with one pendant on each corner."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    """A random tree (parent pointers) plus an arbitrary edge subset."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    edges |= {e for e, k in zip(pairs, keep) if k}
    return Graph(n, edges)


@pytest.fixture
def net():
    return net_graph()


# PASS/FAIL lines from the acceptance tests, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
