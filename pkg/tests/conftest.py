from __future__ import annotations

import numpy as np
import pytest

from swapsmith import LoopyMultigraph, load_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def two_swap():
    return load_graph("two_swap.graph")


def random_loopy_graph(rng, n, edges, loops=True):
    """Uniform endpoints per edge; loops optional."""
    g = LoopyMultigraph(n)
    while g.edge_count() < edges:
        u, v = (int(x) for x in rng.integers(n, size=2))
        if u == v and not loops:
            continue
        g.add_edge(u, v)
    return g


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
