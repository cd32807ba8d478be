"""Canonical labelling for small graphs and isomorphism-free enumeration.

The canonical code of a graph is the largest graph6-order upper-triangle
bit string over the leaves of an individualization-refinement search tree.
Refinement is iterated colour refinement with an isomorphism-invariant cell
order, so the code is a complete invariant.  Within a cell only one vertex of
each twin class is individualized: swapping twins is an automorphism that
fixes every earlier choice, so their subtrees produce identical leaves.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graph import Graph, popcount


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if adj[v] & ~(1 << r) == adj[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_code(G: Graph) -> tuple[int, int]:
    """``(n, code)``; equal for two graphs iff they are isomorphic."""
    adj = G.adj
    if G.n <= 1:
        return G.n, 0
    best = -1
    stack = [_refine(adj, [list(range(G.n))])]
    while stack:
        cells = stack.pop()
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            best = max(best, _code(adj, [c[0] for c in cells]))
            continue
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            stack.append(_refine(adj, split))
    return G.n, best


def canonical_graph(G: Graph) -> Graph:
    """The graph whose graph6 bits are the canonical code."""
    n, code = canonical_code(G)
    edges = []
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def _extend(G: Graph, nbrs: int) -> Graph:
    n = G.n
    adj = list(G.adj)
    for u in range(n):
        if nbrs >> u & 1:
            adj[u] |= 1 << n
    adj.append(nbrs)
    return Graph(n + 1, tuple(adj))


def enumerate_graphs(
    n: int,
    *,
    connected: bool = True,
    accept: Callable[[Graph], bool] | None = None,
) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, canonical form, sorted by code.

    ``accept`` must describe a class closed under deleting a vertex (like
    "girth at least g"); the search extends every accepted graph on ``k``
    vertices by one new vertex.  With ``connected`` and no ``accept``, only
    connected graphs are extended, which is complete because every connected
    graph has a vertex whose deletion leaves it connected.
    """
    from .graph import is_connected

    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [Graph(0, ())]
    extend_connected_only = connected and accept is None
    level = {canonical_code(Graph(1, (0,))): Graph(1, (0,))}
    for k in range(1, n):
        nxt: dict[tuple[int, int], Graph] = {}
        start = 1 if extend_connected_only else 0
        for G in level.values():
            for nbrs in range(start, 1 << k):
                H = _extend(G, nbrs)
                if accept is not None and not accept(H):
                    continue
                key = canonical_code(H)
                if key not in nxt:
                    nxt[key] = H
        level = nxt
    out = [canonical_graph(G) for _, G in sorted(level.items())]
    if connected:
        out = [G for G in out if is_connected(G)]
    return out


def iter_graphs_upto(n_max: int, **kwargs) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n, **kwargs)
