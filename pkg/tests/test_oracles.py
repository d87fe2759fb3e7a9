import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from brute import complete, cycle, path, petersen, random_graph
from p5color.errors import OracleBudgetError
from p5color.generators import GeneratorSpec, gen_substitution
from p5color.graph import Graph
from p5color.oracles import (
    Coloring,
    P5Witness,
    clique_number,
    color_at_most,
    dsatur,
    exact_chromatic,
    find_induced_p5,
    max_clique,
)
from test_graph import graphs


def test_max_clique_examples():
    assert max_clique(complete(5)).size == 5
    assert max_clique(cycle(5)).size == 2
    assert max_clique(Graph.from_edge_list(0, [])).size == 0


def test_max_clique_random_g12():
    rng = random.Random(12)
    for _ in range(20):
        G = random_graph(rng, 12, 0.5)
        q = max_clique(G)
        assert q.is_clique(G)
        assert q.size == brute.clique_number(G)


def test_find_induced_p5_examples():
    w = find_induced_p5(path(5))
    assert w is not None and w.is_valid(path(5))
    assert set(w.path) == set(range(5))
    assert find_induced_p5(cycle(5)) is None
    w = find_induced_p5(petersen())
    assert w is not None and w.is_valid(petersen())
    assert brute.has_induced_p5(petersen())


def test_witness_validation():
    assert not P5Witness((0, 1, 2, 3, 4)).is_valid(cycle(5))
    assert P5Witness((4, 3, 2, 1, 0)).is_valid(path(5))
    assert not P5Witness((0, 1, 2, 3, 3)).is_valid(path(5))


def test_exact_chromatic_examples():
    assert exact_chromatic(cycle(5))[0] == 3
    assert exact_chromatic(complete(4))[0] == 4
    chi, col = exact_chromatic(petersen())
    assert chi == 3 and col.is_proper(petersen())
    assert brute.k_colorable(petersen(), 3) and not brute.k_colorable(petersen(), 2)
    assert exact_chromatic(Graph.from_edge_list(0, []))[0] == 0


def test_color_at_most_examples():
    assert color_at_most(cycle(5), 2) is None
    col = color_at_most(cycle(5), 3)
    assert col is not None and col.is_proper(cycle(5)) and col.num_colors <= 3
    G = petersen()
    assert color_at_most(G, G.n) is not None
    with pytest.raises(ValueError):
        color_at_most(G, -1)


def test_dsatur_examples():
    assert dsatur(complete(4)).num_colors == 4
    assert dsatur(cycle(6)).num_colors == 2
    assert dsatur(cycle(5)).color_of == (0, 1, 0, 1, 2)


def test_coloring_num_colors():
    assert Coloring(()).num_colors == 0
    assert Coloring((0, 2, 1)).num_colors == 3
    assert Coloring((0, 0)).first_conflict(complete(2)) == (0, 1)


def test_budget_errors():
    H = random_graph(random.Random(3), 40, 0.5)
    with pytest.raises(OracleBudgetError):
        max_clique(H, budget=5)
    with pytest.raises(OracleBudgetError):
        exact_chromatic(H, budget=5)


def test_budget_from_environment(monkeypatch):
    H = random_graph(random.Random(3), 40, 0.5)
    monkeypatch.setenv("P5COLOR_ORACLE_BUDGET", "5")
    with pytest.raises(OracleBudgetError):
        max_clique(H)


def test_twin_heavy_graphs_match_plain_backtracking():
    # substitution graphs are full of true twins, which the exact search exploits
    seen = 0
    for seed in range(400):
        spec = GeneratorSpec("substitution", seed, {"depth": 3, "leaf_prob": 0.3, "max_vertices": 14})
        try:
            G, omega = gen_substitution(spec)
        except ValueError:
            continue
        chi, col = exact_chromatic(G)
        assert col.is_proper(G) and col.num_colors == chi
        assert chi == brute.chromatic_number(G)
        assert clique_number(G) == omega
        seen += 1
    assert seen > 150


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_chromatic_properties(G):
    chi, col = exact_chromatic(G)
    assert col.is_proper(G) and col.num_colors == chi
    assert chi >= max_clique(G).size
    if chi > 0:
        assert color_at_most(G, chi - 1) is None
    assert chi == brute.chromatic_number(G)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10), st.integers(0, 5))
def test_color_at_most_sound(G, k):
    col = color_at_most(G, k)
    if col is None:
        assert not brute.k_colorable(G, k)
    else:
        assert col.is_proper(G) and col.num_colors <= k


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=12))
def test_dsatur_bounded_by_max_degree(G):
    col = dsatur(G)
    assert col.is_proper(G)
    assert col.num_colors <= max((G.degree(v) for v in range(G.n)), default=-1) + 1


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_find_induced_p5_matches_brute(G):
    w = find_induced_p5(G)
    assert (w is None) == (not brute.has_induced_p5(G))
    if w is not None:
        assert w.is_valid(G)


def test_split_graphs_are_perfect():
    from p5color.generators import gen_split

    for seed in range(60):
        G = gen_split(GeneratorSpec("split", seed, {"k": seed % 7, "s": 8, "p": 0.5}))
        assert exact_chromatic(G)[0] == max_clique(G).size
