from itertools import combinations

import pytest

from zeroforce.canon import enumerate_graphs
from zeroforce.generators import petersen, random_min_degree
from zeroforce.graph import Graph

ACCEPTANCE_RESULTS = {}


def brute_closure(G, Z):
    """Set-based forcing closure, independent of the bitmask implementation."""
    colored = set(Z)
    nbrs = [set(G.neighbors(v)) for v in range(G.n)]
    while True:
        for v in sorted(colored):
            white = nbrs[v] - colored
            if len(white) == 1:
                colored |= white
                break
        else:
            return colored


def brute_zf(G):
    for s in range(G.n + 1):
        for Z in combinations(range(G.n), s):
            if len(brute_closure(G, Z)) == G.n:
                return s


@pytest.fixture(scope="session")
def connected_upto_7():
    return [G for n in range(1, 8) for G in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto_8(connected_upto_7):
    return connected_upto_7 + enumerate_graphs(8)


@pytest.fixture(scope="session")
def all_graphs_upto_6():
    return [G for n in range(1, 7) for G in enumerate_graphs(n, connected=False)]


@pytest.fixture(scope="session")
def random_sample_9_10():
    """10,000 seeded graphs with minimum degree >= 2, half at n=9 and half at n=10."""
    return list(random_min_degree(9, 2, seed=9, count=5000)) + list(
        random_min_degree(10, 2, seed=10, count=5000)
    )


@pytest.fixture
def pete():
    return petersen()


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def record_acceptance(number, title, ok, detail=""):
    ACCEPTANCE_RESULTS[number] = (title, ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
