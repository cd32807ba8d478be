"""Named graph families for test corpora.

Random graphs use :class:`random.Random` (MT19937) seeded with the given
integer; for a fixed seed the stream is identical on every platform.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .canon import enumerate_graphs
from .graph import Acyclic, Graph, girth, min_degree


class GeneratorError(ValueError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GeneratorError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GeneratorError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError("complete bipartite graph needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i -- n+i``, inner edges ``n+i -- n+(i+k)``."""
    if n < 3 or not 1 <= k < n / 2:
        raise GeneratorError("generalized Petersen needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def heawood() -> Graph:
    """Point-line incidence graph of the Fano plane (3-regular, girth 6, 14 vertices)."""
    lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    return Graph.from_edges(14, [(pt, 7 + j) for j, line in enumerate(lines) for pt in line])


def circulant(n: int, offsets: list[int]) -> Graph:
    if n < 1:
        raise GeneratorError("circulant needs n >= 1")
    edges = set()
    for s in offsets:
        if s % n == 0:
            raise GeneratorError(f"offset {s} is a multiple of n")
        for i in range(n):
            u, v = i, (i + s) % n
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def random_min_degree(n: int, delta: int, seed: int, count: int = 1) -> Iterator[Graph]:
    """``count`` graphs of minimum degree >= ``delta`` by rejection over G(n, m).

    Each trial draws ``m`` uniformly from ``[ceil(n*delta/2), C(n,2)]`` and then
    an ``m``-edge subset uniformly; trials below the degree floor are discarded.
    """
    if n < 1 or delta < 0 or delta > n - 1:
        raise GeneratorError("need n >= 1 and 0 <= delta <= n-1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    lo = -(-n * delta // 2)
    made = 0
    while made < count:
        m = rng.randint(lo, len(pairs))
        G = Graph.from_edges(n, rng.sample(pairs, m))
        if min_degree(G) >= delta:
            made += 1
            yield G


def _girth_at_least(g: int):
    def accept(G: Graph) -> bool:
        h = girth(G)
        return h is Acyclic or h >= g

    return accept


def all_connected(n: int) -> list[Graph]:
    if not 1 <= n <= 8:
        raise GeneratorError("all_connected supports 1 <= n <= 8")
    return enumerate_graphs(n)


def girth_at_least(n: int, g: int) -> list[Graph]:
    """Connected graphs on ``n`` vertices of girth >= ``g`` (forests included)."""
    if not 1 <= n <= 12:
        raise GeneratorError("girth_at_least supports 1 <= n <= 12")
    return enumerate_graphs(n, accept=_girth_at_least(g))


FAMILIES = {
    "cycle": (["n"], lambda n: [cycle(n)]),
    "complete": (["n"], lambda n: [complete(n)]),
    "complete_bipartite": (["a", "b"], lambda a, b: [complete_bipartite(a, b)]),
    "path": (["n"], lambda n: [path(n)]),
    "petersen": ([], lambda: [petersen()]),
    "heawood": ([], lambda: [heawood()]),
    "generalized_petersen": (["n", "k"], lambda n, k: [generalized_petersen(n, k)]),
    "circulant": (["n", "offsets..."], lambda n, *offs: [circulant(n, list(offs))]),
    "random_min_degree": (
        ["n", "delta", "seed", "count?"],
        lambda n, d, seed, count=1: random_min_degree(n, d, seed, count),
    ),
    "all_connected": (["n"], all_connected),
    "girth_at_least": (["n", "g"], girth_at_least),
}


def generate(family: str, *params: int) -> Iterator[tuple[str, Graph]]:
    """Yield ``(tag, graph)`` pairs; the tag records family, parameters, and index."""
    try:
        _, fn = FAMILIES[family]
    except KeyError:
        raise GeneratorError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        graphs = fn(*params)
    except TypeError as exc:
        raise GeneratorError(f"bad parameters for {family}: {exc}") from None
    base = ":".join([family, *map(str, params)])
    for i, G in enumerate(graphs):
        yield f"{base}#{i}", G
