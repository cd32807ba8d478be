import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_closure, brute_zf
from zeroforce.forcing import (
    ForcingSchedule,
    HintError,
    closure,
    is_zero_forcing_set,
    verify_schedule,
    zero_forcing_number,
)
from zeroforce.generators import complete, cycle, path, petersen
from zeroforce.graph import Graph, GraphError, mask_of, members, min_degree


def test_closure_path():
    S, sched = closure(path(3), {0})
    assert S == 0b111
    assert sched.forced == (1, 2) and sched.forcers == (0, 1)


def test_closure_empty_start_on_min_degree_two():
    assert closure(cycle(6), set())[0] == 0
    assert closure(petersen(), 0)[0] == 0


def test_closure_c4_adjacent_pair():
    S, sched = closure(cycle(4), {0, 1})
    assert S == 0b1111
    assert verify_schedule(cycle(4), sched)


def test_is_zero_forcing_set_c5():
    C5 = cycle(5)
    assert is_zero_forcing_set(C5, {0, 1})
    assert not is_zero_forcing_set(C5, {0})
    assert is_zero_forcing_set(C5, C5.vertices)


def test_verify_schedule_examples():
    P3 = path(3)
    assert not verify_schedule(P3, ForcingSchedule(mask_of({1}), (0,), (1,)))
    assert verify_schedule(P3, ForcingSchedule(P3.vertices))
    with pytest.raises(GraphError):
        verify_schedule(P3, ForcingSchedule(mask_of({1}), (5,), (1,)))
    # forcer not yet colored
    assert not verify_schedule(P3, ForcingSchedule(mask_of({0}), (2,), (1,)))
    # length mismatch
    assert not verify_schedule(P3, ForcingSchedule(mask_of({0}), (1, 2), (0,)))


@pytest.mark.parametrize("n", range(1, 9))
def test_zf_path(n):
    assert zero_forcing_number(path(n))[0] == 1 == brute_zf(path(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_zf_complete(n):
    z, w = zero_forcing_number(complete(n))
    assert z == n - 1 == brute_zf(complete(n))
    assert w == mask_of(range(n - 1))


def test_zf_petersen():
    z, w = zero_forcing_number(petersen())
    assert z == 5 == brute_zf(petersen())
    assert is_zero_forcing_set(petersen(), w)


def test_zf_witness_is_lexicographically_first():
    G = cycle(6)
    z, w = zero_forcing_number(G)
    first = next(c for c in combinations(range(G.n), z) if len(brute_closure(G, c)) == G.n)
    assert members(w) == list(first)


def test_zf_hint_is_checked():
    with pytest.raises(HintError):
        zero_forcing_number(path(5), 3)
    assert zero_forcing_number(path(5), 3, check_hint=False)[0] == 3
    assert zero_forcing_number(petersen(), 5)[0] == 5


def test_zf_empty_graph():
    with pytest.raises(GraphError):
        zero_forcing_number(Graph(0, ()))


@st.composite
def graph_and_sets(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = Graph.from_edges(n, chosen)
    return G, draw(st.integers(0, G.vertices))


@given(graph_and_sets())
def test_closure_matches_set_oracle(args):
    G, Z = args
    S, sched = closure(G, Z)
    assert members(S) == sorted(brute_closure(G, members(Z)))
    assert verify_schedule(G, sched)


def test_zf_matches_brute_force_small(connected_upto_7):
    for G in connected_upto_7:
        if G.n <= 6:
            assert zero_forcing_number(G)[0] == brute_zf(G)


def test_zf_at_least_min_degree(connected_upto_7):
    for G in connected_upto_7:
        if G.n >= 2:
            assert zero_forcing_number(G)[0] >= min_degree(G)


def test_superset_of_forcing_set_forces(all_graphs_upto_6):
    for G in all_graphs_upto_6:
        forcing = [Z for Z in range(1 << G.n) if is_zero_forcing_set(G, Z)]
        for Z in forcing:
            for v in range(G.n):
                assert is_zero_forcing_set(G, Z | 1 << v)


def test_zf_random_graphs_match_brute_force():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 9)
        pairs = [e for e in combinations(range(n), 2) if rng.random() < 0.4]
        G = Graph.from_edges(n, pairs)
        assert zero_forcing_number(G)[0] == brute_zf(G)
