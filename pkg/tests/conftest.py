import itertools
import random

import pytest
from hypothesis import strategies as st

from srdf.graph import Graph

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def brute_gamma(g: Graph) -> int:
    """Minimum SRDF weight straight from the definition; for tiny graphs only."""
    best = None
    for f in itertools.product((-1, 1, 2), repeat=g.order):
        ok = True
        for v in range(g.order):
            nbrs = g.neighbors[v]
            if f[v] + sum(f[u] for u in nbrs) < 1:
                ok = False
                break
            if f[v] == -1 and all(f[u] != 2 for u in nbrs):
                ok = False
                break
        if ok and (best is None or sum(f) < best):
            best = sum(f)
    return best


def random_graph(rng: random.Random, order: int, p: float) -> Graph:
    return Graph.from_edges(order, [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < p])


@st.composite
def graphs(draw, min_order=0, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_labeling(draw, min_order=1, max_order=7):
    g = draw(graphs(min_order, max_order))
    f = draw(st.lists(st.sampled_from((-1, 1, 2)), min_size=g.order, max_size=g.order))
    return g, f


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0]) if k.split()[0].isdigit() else 99):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {key}: {detail}")
