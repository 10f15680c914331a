import os

import pytest
from hypothesis import strategies as st

from tmconn.graph import Graph, is_connected
from tmconn.harness import build_census


ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", help="also run the order-8 census checks (minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long") or os.environ.get("TMCONN_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="needs --long or TMCONN_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def census():
    """Censuses are expensive enough to share across the whole session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_census(n, allow_long=n > 7)
        return cache[n]

    return get


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draw(st.booleans())]
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    # random tree first so the result is always connected
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.add((u, v))
    g = Graph.from_edges(n, edges)
    assert is_connected(g)
    return g
