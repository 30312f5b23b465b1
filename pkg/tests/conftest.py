import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hallgame.assign import augment
from hallgame.graph import BipartiteGraph
from hallgame.hypergraph import Hypergraph

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def k11():
    return BipartiteGraph.from_edges(1, 1, [(0, 0)])


def star():
    return BipartiteGraph.from_edges(2, 1, [(0, 0), (1, 0)])


def triangle_hyp():
    return Hypergraph.from_edges(3, [[0, 1], [1, 2], [2, 0]])


def interval_hyp():
    return Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 1, 2]])


def duals_hyp():
    # a={1,3}, b={2,3}, U={1,2}
    return Hypergraph.from_edges(3, [[0, 2], [1, 2]])


@st.composite
def bipartite_graphs(draw, max_side=6):
    n1 = draw(st.integers(0, max_side))
    n2 = draw(st.integers(0, max_side))
    bits = draw(st.lists(st.booleans(), min_size=n1 * n2, max_size=n1 * n2))
    edges = [(i, j) for k, (i, j) in enumerate((i, j) for i in range(n1) for j in range(n2))
             if bits[k]]
    return BipartiteGraph.from_edges(n1, n2, edges)


@st.composite
def hypergraphs(draw, max_vertices=4, max_edges=4):
    n = draw(st.integers(0, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = [draw(st.sets(st.integers(0, n - 1), max_size=n)) if n else set() for _ in range(m)]
    return Hypergraph.from_edges(n, [sorted(e) for e in edges])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def arena(g):
    return augment(g)


ACCEPTANCE_REPORT: list[str] = []


def report(line: str) -> None:
    """Record a measured value for the end-of-run acceptance summary."""
    ACCEPTANCE_REPORT.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance measurements")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
