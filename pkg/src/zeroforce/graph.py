"""Simple undirected graphs over dense integer vertices, stored as bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Adjacency is a tuple of such masks, one per vertex.  Every function
that iterates over vertices does so in ascending index order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

#: Default vertex cap.  Python ints are unbounded, so raising it only costs time.
MAX_VERTICES = 64

VertexSet = int
SetLike = Union[int, Iterable[int]]


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


class _AcyclicType:
    """Girth of a forest.  Deliberately not an ``int``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Acyclic"

    def __reduce__(self):
        return (_AcyclicType, ())


Acyclic = _AcyclicType()


def bit(v: int) -> int:
    return 1 << v


def members(mask: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def as_mask(x: SetLike) -> VertexSet:
    if isinstance(x, int):
        if x < 0:
            raise GraphError("vertex mask must be non-negative")
        return x
    return mask_of(x)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor mask of ``v``.  Construction validates
    symmetry, range, and the absence of loops.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise GraphError(f"graph has {self.n} vertices, cap is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside [0, {self.n})")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, keep: SetLike) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; returns it and the old labels."""
        keep = members(as_mask(keep))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(index[u] for u in iter_members(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(adj)), keep


def _check_subset(G: Graph, X: VertexSet) -> None:
    if X >> G.n:
        raise GraphError(f"vertex set {members(X)} exceeds [0, {G.n})")


def neighborhood(G: Graph, X: SetLike) -> VertexSet:
    """Open neighborhood N(X): neighbors of members of X that are not in X."""
    X = as_mask(X)
    _check_subset(G, X)
    out = 0
    for v in iter_members(X):
        out |= G.adj[v]
    return out & ~X


def closed_neighborhood(G: Graph, X: SetLike) -> VertexSet:
    X = as_mask(X)
    return X | neighborhood(G, X)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(G.degrees())


def average_degree(G: Graph) -> Fraction:
    if G.n == 0:
        raise GraphError("average degree of the empty graph is undefined")
    return Fraction(2 * G.edge_count, G.n)


def girth(G: Graph):
    """Length of a shortest cycle, or :data:`Acyclic` for forests.

    BFS from every vertex; a non-tree edge between depths ``a`` and ``b``
    closes a closed walk of length ``a + b + 1`` through the root, and the
    minimum of these over all roots is the girth.
    """
    best = None
    n = G.n
    adj = G.adj
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in iter_members(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return Acyclic if best is None else best


def components(G: Graph, restrict: SetLike | None = None) -> list[VertexSet]:
    """Connected components of ``G[restrict]``, ordered by smallest member."""
    remaining = G.vertices if restrict is None else as_mask(restrict)
    _check_subset(G, remaining)
    allowed = remaining
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_members(frontier):
                grow |= G.adj[v]
            frontier = grow & allowed & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def induced_edge_count(G: Graph, S: VertexSet) -> int:
    return sum(popcount(G.adj[v] & S) for v in iter_members(S)) // 2


def contract_to_bipartite(
    G: Graph, parts: Sequence[SetLike], N: SetLike
) -> tuple[Graph, tuple[VertexSet, ...]]:
    """Collapse each part to one vertex and keep only part-to-``N`` edges.

    H-vertex ``i < p`` stands for ``parts[i]``; H-vertex ``p + j`` is the
    ``j``-th smallest member of ``N``.  Returns ``H`` and the part masks.
    """
    part_masks = tuple(as_mask(P) for P in parts)
    N = as_mask(N)
    _check_subset(G, N)
    union = 0
    for P in part_masks:
        _check_subset(G, P)
        if not P:
            raise GraphError("empty part")
        if P & union:
            raise GraphError("parts overlap")
        if len(components(G, P)) != 1:
            raise GraphError(f"part {members(P)} does not induce a connected subgraph")
        union |= P
    if N & union:
        raise GraphError("N intersects the parts")
    for v in iter_members(union):
        stray = G.adj[v] & ~(union | N)
        if stray:
            raise GraphError(f"vertex {v} has neighbors {members(stray)} outside parts and N")

    p = len(part_masks)
    n_list = members(N)
    index = {v: p + j for j, v in enumerate(n_list)}
    adj = [0] * (p + len(n_list))
    for i, P in enumerate(part_masks):
        touch = neighborhood(G, P) & N
        for v in iter_members(touch):
            adj[i] |= 1 << index[v]
            adj[index[v]] |= 1 << i
    return Graph(len(adj), tuple(adj)), part_masks
