import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import cycle, complete, random_graph
from p5color.errors import InputError, UsageError
from p5color.graph import (
    ANTICOMPLETE,
    COMPLETE,
    Graph,
    Mixed,
    components,
    components_of,
    induced_subgraph,
    is_connected,
    members,
    mixed_edge_witness,
    vset,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_c5_from_edge_list():
    G = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert G.n == 5 and G.num_edges == 5
    assert all(G.degree(v) == 2 for v in range(5))


def test_empty_graph_and_duplicates():
    assert Graph.from_edge_list(3, []).num_edges == 0
    assert Graph.from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).num_edges == 1


def test_self_loop_names_pair():
    with pytest.raises(InputError, match=r"\(0, 0\)"):
        Graph.from_edge_list(2, [(0, 0)])


def test_out_of_range_names_pair():
    with pytest.raises(InputError, match=r"\(1, 7\)"):
        Graph.from_edge_list(3, [(1, 7)])


def test_from_adjacency_rejects_asymmetry():
    with pytest.raises(InputError):
        Graph.from_adjacency([0b10, 0b00])
    G = Graph.from_adjacency([0b10, 0b01])
    assert G.has_edge(0, 1)


def test_induced_subgraph_examples():
    sub = induced_subgraph(cycle(5), vset([0, 1, 2, 3]))
    assert sub.graph.edges() == [(0, 1), (1, 2), (2, 3)]
    k3 = induced_subgraph(complete(5), vset([1, 3, 4]))
    assert k3.graph.num_edges == 3 and k3.vertex_map == (1, 3, 4)
    G = cycle(7)
    assert induced_subgraph(G, G.vertices).graph == G
    with pytest.raises(UsageError):
        induced_subgraph(G, 1 << 9)


def test_components_examples():
    assert components(cycle(5)) == [0b11111]
    two = Graph.from_edge_list(4, [(0, 2), (1, 3)])
    assert components(two) == [vset([0, 2]), vset([1, 3])]
    assert components(Graph.from_edge_list(3, [])) == [1, 2, 4]


def test_mixed_edge_witness_examples():
    star = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert mixed_edge_witness(star, 0, vset([1, 2, 3])) is COMPLETE
    G = Graph.from_edge_list(3, [(1, 2)])
    assert mixed_edge_witness(G, 0, vset([1, 2])) is ANTICOMPLETE
    P = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    assert mixed_edge_witness(P, 2, vset([0, 1])) == Mixed(1, 0)


def test_mixed_edge_witness_preconditions():
    G = Graph.from_edge_list(3, [(0, 1)])
    with pytest.raises(UsageError):
        mixed_edge_witness(G, 0, vset([0, 1]))
    with pytest.raises(UsageError):
        mixed_edge_witness(G, 0, 0)
    with pytest.raises(UsageError):
        mixed_edge_witness(G, 0, vset([1, 2]))


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_induced_subgraph_matches_parent(G, data):
    S = data.draw(st.integers(0, G.vertices))
    sub = induced_subgraph(G, S)
    vm = sub.vertex_map
    assert list(vm) == members(S)
    for i in range(len(vm)):
        for j in range(len(vm)):
            if i != j:
                assert sub.graph.has_edge(i, j) == G.has_edge(vm[i], vm[j])


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_partition(G):
    comps = components(G)
    union = 0
    for c in comps:
        assert union & c == 0
        assert is_connected(G, c)
        union |= c
    assert union == G.vertices
    for i, a in enumerate(comps):
        for b in comps[i + 1 :]:
            assert all(G.adj[v] & b == 0 for v in members(a))
    assert [min(members(c)) for c in comps] == sorted(min(members(c)) for c in comps)


def test_mixed_edge_witness_payload_random():
    rng = random.Random(7)
    checked = 0
    for _ in range(2000):
        G = random_graph(rng, rng.randint(3, 10), rng.random())
        v = rng.randrange(G.n)
        rest = G.vertices & ~(1 << v)
        for S in components_of(G, rest & rng.getrandbits(G.n)):
            r = mixed_edge_witness(G, v, S)
            inside = G.adj[v] & S
            if isinstance(r, Mixed):
                assert G.has_edge(v, r.a) and not G.has_edge(v, r.b) and G.has_edge(r.a, r.b)
                assert r.a in members(S) and r.b in members(S)
                checked += 1
            elif r is COMPLETE:
                assert inside == S
            else:
                assert inside == 0
    assert checked > 100


def test_complement():
    assert cycle(5).complement().num_edges == 5
    assert complete(4).complement().num_edges == 0
