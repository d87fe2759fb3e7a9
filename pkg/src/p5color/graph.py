"""Dense bitset graphs and elementary structural queries.

Vertex sets are Python ints used as bitmasks: bit ``v`` set means vertex ``v``
is a member.  Every adjacency row is such a mask, so neighbourhood
intersections and differences are single big-int operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import InputError, UsageError


def bit(v: int) -> int:
    return 1 << v


def vset(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a mask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> List[int]:
    """Vertex ids of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood mask of ``v``.  Instances are immutable;
    build them with :meth:`from_edge_list` or :meth:`from_adjacency`.
    """

    n: int
    adj: Tuple[int, ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"edge ({u}, {v}) is a self-loop")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise InputError(f"vertex {v} has a self-loop")
            for u in iter_members(row):
                if not rows[u] >> v & 1:
                    raise InputError(f"adjacency is not symmetric at ({v}, {u})")
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def complement(self) -> "Graph":
        full = self.vertices
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertex_map: Tuple[int, ...]

    def to_parent(self, local: Iterable[int]) -> List[int]:
        return [self.vertex_map[i] for i in local]


def induced_subgraph(G: Graph, S: int) -> InducedSubgraph:
    """Materialize ``G[S]`` with local ids in increasing parent order."""
    if S & ~G.vertices:
        raise UsageError("vertex set is not contained in V(G)")
    vmap = members(S)
    index = {v: i for i, v in enumerate(vmap)}
    rows = []
    for v in vmap:
        rows.append(vset(index[u] for u in iter_members(G.adj[v] & S)))
    return InducedSubgraph(Graph(len(vmap), tuple(rows)), tuple(vmap))


def component_of(G: Graph, start: int, within: int) -> int:
    """Mask of the component of ``G[within]`` containing ``start``."""
    adj = G.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_members(frontier):
            grow |= adj[v]
        frontier = grow & within & ~seen
        seen |= frontier
    return seen


def components_of(G: Graph, within: int) -> List[int]:
    """Components of ``G[within]``, ordered by minimum vertex id."""
    out = []
    rest = within
    while rest:
        comp = component_of(G, lowest(rest), within)
        out.append(comp)
        rest &= ~comp
    return out


def components(G: Graph) -> List[int]:
    return components_of(G, G.vertices)


def is_connected(G: Graph, within: int) -> bool:
    return within == 0 or component_of(G, lowest(within), within) == within


@dataclass(frozen=True)
class Complete:
    pass


@dataclass(frozen=True)
class Anticomplete:
    pass


@dataclass(frozen=True)
class Mixed:
    """``v`` is adjacent to ``a`` but not to ``b``, and ``ab`` is an edge."""

    a: int
    b: int


COMPLETE = Complete()
ANTICOMPLETE = Anticomplete()


def mixed_edge_witness(G: Graph, v: int, S: int):
    """Classify ``v`` against the connected set ``S``.

    Returns ``COMPLETE``, ``ANTICOMPLETE`` or ``Mixed(a, b)``.  The edge is
    found by searching outward from the smallest neighbour of ``v`` in ``S``
    through neighbours of ``v`` only; the first step that leaves ``N(v)``
    is the witness.  Connectivity of ``S`` is only required when ``v`` is
    mixed on it; the other two answers are well defined for any set.
    """
    if S == 0:
        raise UsageError("mixed_edge_witness needs a nonempty set")
    if S >> v & 1:
        raise UsageError(f"vertex {v} lies inside the set")
    adj = G.adj
    inside = adj[v] & S
    if inside == 0:
        return ANTICOMPLETE
    if inside == S:
        return COMPLETE
    if not is_connected(G, S):
        raise UsageError("mixed_edge_witness needs a connected set when the vertex is mixed")
    outside = S & ~adj[v]
    seen = 1 << lowest(inside)
    queue = [lowest(inside)]
    while queue:
        nxt = []
        for a in queue:
            hit = adj[a] & outside
            if hit:
                return Mixed(a, lowest(hit))
            new = adj[a] & inside & ~seen
            seen |= new
            nxt.extend(iter_members(new))
        queue = sorted(nxt)
    # S connected and mixed guarantees an exit edge from the neighbour side
    raise AssertionError("unreachable: connected mixed set without boundary edge")
