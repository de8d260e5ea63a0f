from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from factorcrit.graph_core import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.append((min(order[i], order[j]), max(order[i], order[j])))
    return Graph.from_edges(n, set(edges))


@st.composite
def graph_and_subset(draw, min_n: int = 1, max_n: int = 9, nonempty: bool = False):
    g = draw(graphs(min_n=max(min_n, 1), max_n=max_n))
    lo = 1 if nonempty else 0
    x = draw(st.integers(lo, (1 << g.n) - 1))
    return g, x


def seeded_graphs(count: int, seed: int, max_n: int = 9):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import VERDICTS

    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[number])
