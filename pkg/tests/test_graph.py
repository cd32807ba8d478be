from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforce.graph import (
    Acyclic,
    Graph,
    GraphError,
    components,
    contract_to_bipartite,
    girth,
    iter_members,
    mask_of,
    members,
    min_degree,
    neighborhood,
)
from zeroforce.generators import (
    complete,
    complete_bipartite,
    cycle,
    heawood,
    path,
    petersen,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def has_cycle_of_length(G, k):
    """Brute force: some k distinct vertices in cyclic order, all consecutive pairs adjacent."""
    for combo in combinations(range(G.n), k):
        first = combo[0]
        for rest in permutations(combo[1:]):
            order = (first,) + rest
            if all(G.has_edge(order[i], order[(i + 1) % k]) for i in range(k)):
                return True
    return False


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_neighborhood_examples(c5):
    assert neighborhood(c5, {0, 1}) == mask_of({2, 4})
    assert neighborhood(c5, set()) == 0
    assert neighborhood(complete(4), {0}) == mask_of({1, 2, 3})
    with pytest.raises(GraphError):
        neighborhood(c5, {7})


@given(graphs(), st.data())
def test_neighborhood_properties(G, data):
    X = data.draw(st.integers(0, G.vertices))
    N = neighborhood(G, X)
    assert N & X == 0
    union = 0
    for v in iter_members(X):
        union |= G.adj[v]
    assert N & ~union == 0


def test_girth_petersen_brute_force():
    G = petersen()
    assert not has_cycle_of_length(G, 3)
    assert not has_cycle_of_length(G, 4)
    assert has_cycle_of_length(G, 5)
    assert girth(G) == 5


@pytest.mark.parametrize(
    "G, expected",
    [(cycle(7), 7), (path(4), Acyclic), (complete(5), 3), (complete_bipartite(3, 3), 4), (heawood(), 6)],
)
def test_girth_examples(G, expected):
    assert girth(G) is expected if expected is Acyclic else girth(G) == expected


@settings(max_examples=300)
@given(graphs())
def test_girth_matches_networkx(G):
    g = girth(G)
    ref = nx.girth(to_nx(G))
    assert (g is Acyclic and ref == float("inf")) or g == ref


def test_forest_characterisation_exhaustive(all_graphs_upto_6):
    from zeroforce.canon import enumerate_graphs

    corpus = all_graphs_upto_6 + [G for n in (7, 8) for G in enumerate_graphs(n)]
    for G in corpus:
        acyclic = girth(G) is Acyclic
        assert acyclic == (G.edge_count <= G.n - len(components(G)))


def test_min_degree():
    assert min_degree(petersen()) == 3
    assert min_degree(complete(5)) == 4
    assert min_degree(complete_bipartite(1, 3)) == 1
    with pytest.raises(GraphError):
        min_degree(Graph(0, ()))


def test_components_examples():
    C6 = cycle(6)
    assert components(C6, {0, 1, 3, 4}) == [mask_of({0, 1}), mask_of({3, 4})]
    assert components(C6, 0) == []
    assert components(C6) == [C6.vertices]


@given(graphs(), st.data())
def test_components_partition(G, data):
    R = data.draw(st.integers(0, G.vertices))
    comps = components(G, R)
    total = 0
    for c in comps:
        assert c & total == 0
        total |= c
    assert total == R
    owner = {v: i for i, c in enumerate(comps) for v in iter_members(c)}
    for u, v in G.edges():
        if u in owner and v in owner:
            assert owner[u] == owner[v]
    assert [min(members(c)) for c in comps] == sorted(min(members(c)) for c in comps)


def test_contract_c6():
    H, parts = contract_to_bipartite(cycle(6), [{0, 1}, {3, 4}], {2, 5})
    assert H.n == 4
    assert sorted(H.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert girth(H) == 4
    assert parts == (mask_of({0, 1}), mask_of({3, 4}))


def test_contract_single_vertex_is_star():
    G = petersen()
    N = neighborhood(G, {0})
    H, _ = contract_to_bipartite(G, [{0}], N)
    assert H.degrees() == [3, 1, 1, 1]


def test_contract_errors():
    G = cycle(6)
    with pytest.raises(GraphError):
        contract_to_bipartite(G, [{0, 1}, {1, 2}], {3, 5})
    with pytest.raises(GraphError):
        contract_to_bipartite(G, [{0, 3}], {1, 2, 4, 5})
    with pytest.raises(GraphError):
        contract_to_bipartite(G, [{0, 1}], {2})


@given(graphs(), st.data())
def test_contract_is_bipartite(G, data):
    X = data.draw(st.integers(1, G.vertices))
    parts = components(G, X)
    N = neighborhood(G, X)
    H, _ = contract_to_bipartite(G, parts, N)
    p = len(parts)
    for u, v in H.edges():
        assert (u < p) != (v < p)
