"""Seeded generators of P5-free graphs.

Substitution trees and split graphs are P5-free by construction; rejection
sampling is P5-free by oracle.  Callers still screen every output with
:func:`find_induced_p5`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import GenerationError, UsageError
from .graph import Graph
from .oracles import P5Witness, find_induced_p5

KINDS = ("substitution", "split", "rejection")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    seed: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown generator kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "seed": self.seed, **self.params}


class _Tree:
    """Vertex count, edge list and clique number of a composed graph."""

    def __init__(self, n: int, edges: List[Tuple[int, int]], omega: int):
        self.n = n
        self.edges = edges
        self.omega = omega


def _leaf() -> _Tree:
    return _Tree(1, [], 1)


def _compose(children: Sequence[_Tree], links: Sequence[Tuple[int, int]]) -> _Tree:
    offsets = []
    n = 0
    edges: List[Tuple[int, int]] = []
    for ch in children:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in ch.edges)
        n += ch.n
    for i, j in links:
        for u in range(children[i].n):
            for v in range(children[j].n):
                edges.append((offsets[i] + u, offsets[j] + v))
    return _Tree(n, edges, 0)


def c5_quotient(children: Sequence[_Tree]) -> _Tree:
    t = _compose(children, [(i, (i + 1) % 5) for i in range(5)])
    t.omega = max(children[i].omega + children[(i + 1) % 5].omega for i in range(5))
    return t


def join(children: Sequence[_Tree]) -> _Tree:
    k = len(children)
    t = _compose(children, [(i, j) for i in range(k) for j in range(i + 1, k)])
    t.omega = sum(c.omega for c in children)
    return t


def union(children: Sequence[_Tree]) -> _Tree:
    t = _compose(children, [])
    t.omega = max(c.omega for c in children)
    return t


def clique_tree(k: int) -> _Tree:
    return join([_leaf() for _ in range(k)]) if k > 1 else _leaf()


def c5_blowup(k: int) -> Graph:
    """C5 with every vertex replaced by a clique of size ``k`` (clique number ``2k``)."""
    t = c5_quotient([clique_tree(k) for _ in range(5)])
    return Graph.from_edge_list(t.n, t.edges)


def gen_substitution(spec: GeneratorSpec) -> Tuple[Graph, int]:
    """Random modular composition of single vertices; returns the graph and its clique number.

    Parameters: ``depth`` (tree height), ``max_vertices`` (cap), ``max_children``
    for joins and unions, ``leaf_prob``, and relative weights ``w_c5``,
    ``w_join``, ``w_union``.
    """
    p = spec.params
    depth = int(p.get("depth", 3))
    cap = int(p.get("max_vertices", 60))
    max_children = int(p.get("max_children", 3))
    leaf_prob = float(p.get("leaf_prob", 0.3))
    weights = [float(p.get("w_c5", 1.0)), float(p.get("w_join", 1.0)), float(p.get("w_union", 0.5))]
    if depth < 0 or cap < 1 or max_children < 2:
        raise UsageError("substitution needs depth >= 0, max_vertices >= 1, max_children >= 2")
    rng = random.Random(spec.seed)

    def build(d: int) -> _Tree:
        if d == 0 or rng.random() < leaf_prob:
            return _leaf()
        kind = rng.choices(("c5", "join", "union"), weights)[0]
        if kind == "c5":
            return c5_quotient([build(d - 1) for _ in range(5)])
        kids = [build(d - 1) for _ in range(rng.randint(2, max_children))]
        return join(kids) if kind == "join" else union(kids)

    t = build(depth)
    if t.n > cap:
        raise GenerationError(f"substitution produced {t.n} vertices, cap is {cap}")
    return Graph.from_edge_list(t.n, t.edges), t.omega


def gen_split(spec: GeneratorSpec) -> Graph:
    """Clique on ``0..k-1``, stable set on ``k..k+s-1``, cross edges with probability ``p``."""
    k = int(spec.params.get("k", 5))
    s = int(spec.params.get("s", 5))
    prob = float(spec.params.get("p", 0.5))
    if k < 0 or s < 0:
        raise UsageError("split sides must be non-negative")
    rng = random.Random(spec.seed)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for u in range(k):
        for v in range(k, k + s):
            if rng.random() < prob:
                edges.append((u, v))
    return Graph.from_edge_list(k + s, edges)


def _gnp(rng: random.Random, n: int, prob: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return Graph.from_edge_list(n, edges)


def rejection_samples(spec: GeneratorSpec) -> Iterator[Tuple[Graph, Optional[P5Witness]]]:
    """Every G(n, p) sample drawn by the rejection sampler with its P5 witness (``None`` when accepted)."""
    n = int(spec.params.get("n", 10))
    prob = float(spec.params.get("p", 0.5))
    tries = int(spec.params.get("max_tries", 1000))
    rng = random.Random(spec.seed)
    for _ in range(tries):
        G = _gnp(rng, n, prob)
        wit = find_induced_p5(G)
        yield G, wit
        if wit is None:
            return


def gen_rejection(spec: GeneratorSpec) -> Optional[Graph]:
    for G, wit in rejection_samples(spec):
        if wit is None:
            return G
    return None


def generate(spec: GeneratorSpec) -> Optional[Graph]:
    if spec.kind == "substitution":
        return gen_substitution(spec)[0]
    if spec.kind == "split":
        return gen_split(spec)
    return gen_rejection(spec)
