"""Exact and heuristic oracles: maximum clique, colouring, induced-P5 search.

All searches run on bitmask adjacency rows and accept an optional ``within``
mask so callers can query induced subgraphs without materializing them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import OracleBudgetError
from .graph import Graph, bit, iter_members, lowest, members, popcount

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("P5COLOR_ORACLE_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class Clique:
    vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def is_clique(self, G: Graph) -> bool:
        vs = self.vertices
        return all(G.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex (``-1`` only for vertices outside a partial colouring)."""

    color_of: Tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.color_of, default=-1) + 1

    @classmethod
    def from_mapping(cls, n: int, mapping: Dict[int, int]) -> "Coloring":
        out = [-1] * n
        for v, c in mapping.items():
            out[v] = c
        return cls(tuple(out))

    def is_proper(self, G: Graph) -> bool:
        return self.first_conflict(G) is None

    def first_conflict(self, G: Graph) -> Optional[Tuple[int, int]]:
        col = self.color_of
        for u, v in G.edges():
            if col[u] >= 0 and col[u] == col[v]:
                return (u, v)
        return None


@dataclass(frozen=True)
class P5Witness:
    """Vertices of an induced path ``v1-v2-v3-v4-v5`` in path order."""

    path: Tuple[int, int, int, int, int]

    def is_valid(self, G: Graph) -> bool:
        p = self.path
        if len(p) != 5 or len(set(p)) != 5 or not all(0 <= v < G.n for v in p):
            return False
        for i in range(5):
            for j in range(i + 1, 5):
                if G.has_edge(p[i], p[j]) != (j == i + 1):
                    return False
        return True

    def to_dict(self) -> dict:
        return {"p5": list(self.path)}


# -- maximum clique ---------------------------------------------------------


def _color_sort(adj: Sequence[int], P: int) -> Tuple[List[int], List[int]]:
    # greedy colour classes; bounds[i] is the colour of order[i]
    order: List[int] = []
    bounds: List[int] = []
    k = 0
    U = P
    while U:
        k += 1
        Q = U
        while Q:
            v = lowest(Q)
            U &= ~(1 << v)
            Q &= ~(1 << v) & ~adj[v]
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique_mask(G: Graph, within: Optional[int] = None, budget: Optional[int] = None) -> int:
    """Mask of a maximum clique of ``G[within]`` (branch and bound, colour bounds)."""
    adj = G.adj
    P0 = G.vertices if within is None else within
    if P0 == 0:
        return 0
    budget = default_budget() if budget is None else budget

    # greedy seed: repeatedly take the candidate with most candidate neighbours
    seed = 0
    cand = P0
    while cand:
        v = max(iter_members(cand), key=lambda u: (popcount(adj[u] & cand), -u))
        seed |= 1 << v
        cand &= adj[v]
    best = [popcount(seed), seed]
    nodes = [0]

    def expand(R: int, size: int, P: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise OracleBudgetError("max_clique", budget)
        order, bounds = _color_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            NP = P & adj[v]
            if NP:
                expand(R | (1 << v), size + 1, NP)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = R | (1 << v)
            P &= ~(1 << v)

    expand(0, 0, P0)
    return best[1]


def max_clique(G: Graph, within: Optional[int] = None, budget: Optional[int] = None) -> Clique:
    return Clique(tuple(members(max_clique_mask(G, within, budget))))


def clique_number(G: Graph, within: Optional[int] = None, budget: Optional[int] = None) -> int:
    return popcount(max_clique_mask(G, within, budget))


# -- induced P5 -------------------------------------------------------------


def find_induced_p5(G: Graph, within: Optional[int] = None) -> Optional[P5Witness]:
    """First induced P5 ``v1..v5`` of ``G[within]``, or ``None`` if P5-free.

    Enumerates the ordered edge ``v2 v3`` and extends outward, pruning each
    extension with neighbourhood differences so only induced paths survive.
    """
    adj = G.adj
    W = G.vertices if within is None else within
    for v2 in iter_members(W):
        n2 = adj[v2] & W
        for v3 in iter_members(n2):
            n3 = adj[v3] & W
            ones = n2 & ~n3 & ~bit(v3)
            fours = n3 & ~n2 & ~bit(v2)
            if not ones or not fours:
                continue
            for v1 in iter_members(ones):
                n1 = adj[v1]
                for v4 in iter_members(fours & ~n1):
                    fives = adj[v4] & W & ~(n1 | n2 | n3) & ~bit(v3)
                    if fives:
                        return P5Witness((v1, v2, v3, v4, lowest(fives)))
    return None


def is_p5_free(G: Graph, within: Optional[int] = None) -> bool:
    return find_induced_p5(G, within) is None


# -- colouring --------------------------------------------------------------


def dsatur_map(G: Graph, within: Optional[int] = None) -> Dict[int, int]:
    """DSATUR: highest saturation first, then degree, then smallest id."""
    adj = G.adj
    W = G.vertices if within is None else within
    deg = {v: popcount(adj[v] & W) for v in iter_members(W)}
    forb = {v: 0 for v in deg}
    color: Dict[int, int] = {}
    uncolored = W
    while uncolored:
        v = max(iter_members(uncolored), key=lambda u: (popcount(forb[u]), deg[u], -u))
        f = forb[v]
        c = 0
        while f >> c & 1:
            c += 1
        color[v] = c
        uncolored &= ~(1 << v)
        for u in iter_members(adj[v] & uncolored):
            forb[u] |= 1 << c
    return color


def dsatur(G: Graph) -> Coloring:
    return Coloring.from_mapping(G.n, dsatur_map(G))


class _Search:
    """Backtracking k-colouring with dynamic saturation ordering.

    Two symmetries are broken: a vertex may open only the lowest unused
    colour, and a class of true twins (equal closed neighbourhoods inside the
    search set) is coloured consecutively in id order with increasing colours.
    Both are sound together because the new colours a twin class opens are
    always the next consecutive ones.
    """

    def __init__(self, G: Graph, W: int, budget: int):
        self.adj = G.adj
        self.W = W
        self.budget = budget
        self.nodes = 0
        self.twins = {}
        for v in iter_members(W):
            cls = 0
            closed = (G.adj[v] | (1 << v)) & W
            for u in iter_members(closed):
                if (G.adj[u] | (1 << u)) & W == closed:
                    cls |= 1 << u
            self.twins[v] = cls

    def run(self, k: int, seed_clique: int) -> Optional[Dict[int, int]]:
        adj = self.adj
        q = popcount(seed_clique)
        if q > k:
            return None
        if self.W == 0:
            return {}
        forb = {v: 0 for v in iter_members(self.W)}
        color: Dict[int, int] = {}
        uncolored = self.W
        for c, v in enumerate(members(seed_clique)):
            color[v] = c
            uncolored &= ~(1 << v)
        for v, c in list(color.items()):
            for u in iter_members(adj[v] & uncolored):
                forb[u] |= 1 << c
        deg = {v: popcount(adj[v] & self.W) for v in forb}
        self.k = k
        if self._go(uncolored, q, forb, color, deg, -1, 0):
            return color
        return None

    def _go(self, uncolored: int, used: int, forb, color, deg, forced: int, low: int) -> bool:
        if not uncolored:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise OracleBudgetError("color_at_most", self.budget)
        adj = self.adj
        k = self.k
        best = -1
        bkey = None
        for u in iter_members(uncolored):
            s = popcount(forb[u])
            if s >= k:
                return False
            key = (s, deg[u])
            if bkey is None or key > bkey:
                best, bkey = u, key
        if forced >= 0:
            v = forced
        else:
            v = lowest(self.twins[best] & uncolored)
        rest = uncolored & ~(1 << v)
        later = self.twins[v] & rest
        nxt = lowest(later) if later else -1
        nbrs = list(iter_members(adj[v] & rest))
        choices = [c for c in range(low, used) if not forb[v] >> c & 1]
        if used < k and used >= low:
            choices.append(used)
        for c in choices:
            cb = 1 << c
            touched = [u for u in nbrs if not forb[u] & cb]
            for u in touched:
                forb[u] |= cb
            color[v] = c
            if self._go(rest, max(used, c + 1), forb, color, deg, nxt, c + 1 if nxt >= 0 else 0):
                return True
            for u in touched:
                forb[u] &= ~cb
            del color[v]
        return False


def _reduce(G: Graph, W: int, k: Optional[int] = None) -> Tuple[int, List[Tuple[int, int]]]:
    """Peel vertices that never affect k-colourability.

    A vertex ``u`` whose neighbourhood lies inside that of a non-neighbour
    ``v`` can copy ``v``'s colour; with ``k`` given, a vertex of degree below
    ``k`` can always be coloured last.  Returns the core and the removal
    order as ``(u, v)`` pairs (``v = -1`` for the degree rule).
    """
    adj = G.adj
    removed: List[Tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for u in members(W):
            nu = adj[u] & W
            if k is not None and popcount(nu) < k:
                W &= ~(1 << u)
                removed.append((u, -1))
                changed = True
                continue
            for v in iter_members(W & ~nu & ~(1 << u)):
                if nu & ~adj[v] == 0:
                    W &= ~(1 << u)
                    removed.append((u, v))
                    changed = True
                    break
    return W, removed


def _extend(G: Graph, color: Dict[int, int], removed: List[Tuple[int, int]]) -> Dict[int, int]:
    for u, v in reversed(removed):
        if v >= 0:
            color[u] = color[v]
        else:
            taken = {color[x] for x in iter_members(G.adj[u]) if x in color}
            color[u] = next(c for c in range(len(taken) + 1) if c not in taken)
    return color


def color_at_most_map(
    G: Graph, k: int, within: Optional[int] = None, budget: Optional[int] = None
) -> Optional[Dict[int, int]]:
    W = G.vertices if within is None else within
    budget = default_budget() if budget is None else budget
    if k < 0:
        raise ValueError("k must be non-negative")
    core, removed = _reduce(G, W, k)
    found = _Search(G, core, budget).run(k, max_clique_mask(G, core, budget))
    return None if found is None else _extend(G, found, removed)


def color_at_most(G: Graph, k: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists."""
    found = color_at_most_map(G, k, budget=budget)
    return None if found is None else Coloring.from_mapping(G.n, found)


def exact_chromatic_map(
    G: Graph, within: Optional[int] = None, budget: Optional[int] = None
) -> Tuple[int, Dict[int, int]]:
    W = G.vertices if within is None else within
    if W == 0:
        return 0, {}
    budget = default_budget() if budget is None else budget
    upper = dsatur_map(G, W)
    ub = max(upper.values()) + 1
    core, removed = _reduce(G, W)
    seed = max_clique_mask(G, core, budget)
    search = _Search(G, core, budget)
    for k in range(popcount(seed), ub):
        found = search.run(k, seed)
        if found is not None:
            return k, _extend(G, found, removed)
    return ub, upper


def exact_chromatic(G: Graph, budget: Optional[int] = None) -> Tuple[int, Coloring]:
    """Chromatic number with a witnessing colouring.

    Raises :class:`OracleBudgetError` when the search tree exceeds ``budget``.
    """
    chi, found = exact_chromatic_map(G, budget=budget)
    return chi, Coloring.from_mapping(G.n, found)
