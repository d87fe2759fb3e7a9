import json
import random
from dataclasses import replace

import pytest

import brute
from brute import complete, cycle, random_graph
from p5color.bound import color_budget
from p5color.colorer import (
    ColorOptions,
    ColoringCertificate,
    FallbackCutset,
    color_component_via_joint,
    color_p5free,
    color_via_cutset,
    verify_certificate,
)
from p5color.decompose import RecursionContext, cutset_partition
from p5color.errors import UsageError
from p5color.generators import GeneratorSpec, c5_blowup, gen_substitution
from p5color.graph import Graph, components_of, members, vset
from p5color.io import from_graph6
from p5color.oracles import Coloring, P5Witness, clique_number, exact_chromatic, find_induced_p5

STRUCTURAL = ColorOptions(fast_path=False, base_size=4)


def certify(G, opt=None):
    cert = color_p5free(G, opt)
    assert isinstance(cert, ColoringCertificate)
    rep = verify_certificate(G, cert)
    assert rep.ok, rep.message
    return cert


def test_c5():
    cert = certify(cycle(5))
    assert cert.num_colors == 3 and cert.budget == 3 and cert.omega == 2


def test_k6():
    cert = certify(complete(6))
    assert cert.num_colors == 6 and cert.budget == color_budget(6) == 102


def test_c5_blowup_k4():
    G = c5_blowup(4)
    for opt in (None, STRUCTURAL):
        cert = certify(G, opt)
        assert cert.omega == 8 and cert.budget == 512
        assert 10 <= cert.num_colors <= 512
    assert exact_chromatic(G)[0] == 10


def test_empty_and_disconnected():
    assert certify(Graph.from_edge_list(0, [])).num_colors == 0
    G = Graph.from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4)])
    cert = certify(G, STRUCTURAL)
    assert cert.trace.rule == "disconnected"
    assert cert.num_colors == 3


def test_structural_rules_fire():
    rules = {}
    for k in (2, 3, 4, 5):
        cert = certify(c5_blowup(k), STRUCTURAL)
        for r, c in cert.trace.rule_counts().items():
            rules[r] = rules.get(r, 0) + c
    assert "neighborhood-split" in rules and "base-exact" in rules


def test_apex_choice_is_configurable():
    G = c5_blowup(3)
    a = certify(G, replace(STRUCTURAL, apex="min-id"))
    b = certify(G, STRUCTURAL)
    assert a.trace.info["a"] == 0
    assert b.num_colors <= b.budget
    with pytest.raises(UsageError):
        ColorOptions(apex="random")
    with pytest.raises(UsageError):
        ColorOptions(omega_base=3)


# -- joint step --------------------------------------------------------------------


def blowup_joint_instance():
    # C5 with bags of three; apex 0 sits in bag 0, B is bags 2 and 3
    G = c5_blowup(3)
    return G, 0, vset(range(6, 12)), RecursionContext(6)


def test_joint_low_component():
    G = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    col, node = color_component_via_joint(G, 0, vset([2, 3]), RecursionContext(4))
    assert node.rule != "joint-branch" and col.num_colors <= color_budget(2)


def test_joint_branch_completes():
    G, a, B, ctx = blowup_joint_instance()
    col, node = color_component_via_joint(G, a, B, ctx, STRUCTURAL)
    assert node.rule == "joint-branch"
    assert node.budget == 5 * color_budget(3)
    assert set(node.info["P"]) <= set(G.neighbors(a)) and len(node.info["P"]) == 3
    used = [col.color_of[v] for v in members(B)]
    assert all(c >= 0 for c in used)
    assert all(col.color_of[u] != col.color_of[v] for u, v in G.edges() if B >> u & 1 and B >> v & 1)
    assert max(used) + 1 <= node.budget


def test_joint_cutset_fallback():
    G = from_graph6("MF{Ww{F@wN{FwMwM?")
    assert find_induced_p5(G) is None
    ctx = RecursionContext(clique_number(G))
    r = color_component_via_joint(G, 0, vset(range(5, 11)), ctx, STRUCTURAL)
    assert isinstance(r, FallbackCutset) and r.rule == "cutset-fallback"
    X, Y = r.parts
    assert clique_number(G, X) <= ctx.m and clique_number(G, Y) <= ctx.m
    assert len(components_of(G, G.vertices & ~(X | Y))) >= 2


CLIQUE_FALLBACK = "Kv|Xx[~L@geb"


def test_joint_clique_fallback():
    G = from_graph6(CLIQUE_FALLBACK)
    assert find_induced_p5(G) is None
    ctx = RecursionContext(clique_number(G))
    r = color_component_via_joint(G, 0, vset(range(5, 12)), ctx, STRUCTURAL)
    assert isinstance(r, FallbackCutset) and r.rule == "clique-fallback"
    XP, XQ = r.parts
    assert clique_number(G, XP) <= ctx.m and clique_number(G, XQ) <= ctx.m
    cert = certify(G, replace(STRUCTURAL, apex="min-id"))
    assert cert.trace.rule_counts().get("clique-fallback") == 1


def test_joint_requires_connected_graph():
    G = Graph.from_edge_list(3, [(1, 2)])
    with pytest.raises(UsageError):
        color_component_via_joint(G, 0, vset([1, 2]), RecursionContext(2))


# -- cutset colouring ---------------------------------------------------------------------


def test_cutset_two_triangles():
    G = Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    col, nodes = color_via_cutset(G, vset([2]), RecursionContext(3))
    assert col.color_of[2] == -1 and col.is_proper(G) and col.num_colors <= 3


def test_cutset_star():
    G = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    col, _ = color_via_cutset(G, vset([0]), RecursionContext(2))
    assert len({col.color_of[v] for v in (1, 2, 3)}) == 1


def cutset_instance():
    # u=0, v=1, adjacent y1=2 and y2=3; y1 complete to the K5 on 4..8, y2 to the K4 on 9..12; s=13 hangs off y1
    E = [(0, 1), (1, 2), (1, 3), (2, 3), (13, 2)]
    E += [(2, r) for r in range(4, 9)] + [(3, r) for r in range(9, 13)]
    for lo, hi in ((4, 9), (9, 13)):
        E += [(a, b) for a in range(lo, hi) for b in range(a + 1, hi)]
    return Graph.from_edge_list(14, E)


def test_cutset_instance_shape():
    G = cutset_instance()
    assert find_induced_p5(G) is None and clique_number(G) == 6
    ctx = RecursionContext(6)
    B = G.vertices & ~vset([0, 1])
    d = cutset_partition(G, vset([1]), B, ctx)
    assert d.R == [vset(range(4, 9)), vset(range(9, 13))] and d.S == vset([13]) and d.cover == [0, 1]
    col, nodes = color_via_cutset(G, vset([1]), ctx, STRUCTURAL)
    assert col.is_proper(G)
    assert all(n.used <= n.budget for n in nodes)
    assert col.num_colors <= color_budget(5) + 6 * color_budget(3)
    lower = [col.color_of[v] for v in range(2, 14)]
    assert brute.k_colorable(G, 6) and max(lower) + 1 >= 6


# -- verification -------------------------------------------------------------------------


def test_verify_detects_recolored_edge():
    G = c5_blowup(2)
    cert = certify(G, STRUCTURAL)
    u, v = G.edges()[0]
    colors = list(cert.coloring.color_of)
    colors[u] = colors[v]
    bad = replace(cert, coloring=Coloring(tuple(colors)))
    rep = verify_certificate(G, bad)
    assert not rep.ok and "improper edge" in rep.message


def test_verify_detects_budget_decrement():
    G = c5_blowup(2)
    cert = certify(G)
    bad = replace(cert, budget=cert.num_colors - 1)
    rep = verify_certificate(G, bad)
    assert not rep.ok and "budget exceeded" in rep.message


def test_verify_detects_wrong_omega():
    G = c5_blowup(2)
    cert = certify(G)
    rep = verify_certificate(G, replace(cert, omega=cert.omega + 1))
    assert not rep.ok


def test_verify_detects_tampered_trace():
    G = c5_blowup(3)
    cert = certify(G, STRUCTURAL)
    d = cert.to_dict()
    d["trace"]["children"][0]["budget"] += 1000
    rep = verify_certificate(G, ColoringCertificate.from_dict(d))
    assert not rep.ok


def test_certificate_json_roundtrip():
    G = from_graph6(CLIQUE_FALLBACK)
    cert = certify(G, replace(STRUCTURAL, apex="min-id"))
    text = json.dumps(cert.to_dict())
    back = ColoringCertificate.from_dict(json.loads(text))
    assert back.to_dict() == cert.to_dict()
    assert verify_certificate(G, back).ok
    assert set(cert.to_dict()) == {"omega", "budget", "colors", "assignment", "trace"}


# -- properties ------------------------------------------------------------------


def substitution_graphs(count, seed, max_vertices=40):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        spec = GeneratorSpec("substitution", rng.randrange(10**9), {"depth": 3, "leaf_prob": 0.2, "max_vertices": max_vertices})
        try:
            out.append(gen_substitution(spec))
        except ValueError:
            pass
    return out


@pytest.mark.parametrize("opt", [ColorOptions(), STRUCTURAL, replace(STRUCTURAL, apex="min-id"), replace(STRUCTURAL, chi_classify=True)])
def test_p5_free_graphs_always_certified(opt):
    for G, omega in substitution_graphs(60, 5):
        cert = certify(G, opt)
        assert cert.omega == omega and cert.num_colors <= color_budget(omega)
        for node in cert.trace.walk():
            assert node.used <= node.budget


def test_chi_lower_bound_on_small_graphs():
    for G, _ in substitution_graphs(60, 9, max_vertices=22):
        cert = certify(G, STRUCTURAL)
        assert exact_chromatic(G)[0] <= cert.num_colors


def test_non_p5_free_inputs_give_valid_output():
    rng = random.Random(4)
    kinds = set()
    for _ in range(150):
        G = random_graph(rng, rng.randint(5, 14), rng.uniform(0.2, 0.8))
        for opt in (STRUCTURAL, ColorOptions()):
            out = color_p5free(G, opt)
            if isinstance(out, P5Witness):
                assert out.is_valid(G)
                kinds.add("witness")
            else:
                assert verify_certificate(G, out).ok
                kinds.add("certificate")
    assert kinds == {"witness", "certificate"}


def test_recognize_option_screens_first():
    out = color_p5free(brute.path(5), ColorOptions(recognize=True))
    assert isinstance(out, P5Witness) and out.is_valid(brute.path(5))
