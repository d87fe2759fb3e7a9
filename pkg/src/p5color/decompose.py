"""Certifying structural subroutines.

Each routine either returns the decomposition object it was asked for or an
induced P5 that makes the decomposition impossible.  All sets are bitmasks
over the host graph; ``within`` restricts the ambient graph to an induced
subgraph so the recursion never has to relabel vertices.

Thresholds of the form "chromatic number above f(m)" are replaced by the
decidable test "clique number above m".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .errors import UsageError
from .graph import (
    COMPLETE,
    Graph,
    Mixed,
    bit,
    component_of,
    components_of,
    is_connected,
    iter_members,
    lowest,
    members,
    mixed_edge_witness,
    popcount,
)
from .oracles import P5Witness, clique_number, max_clique_mask

OmegaFn = Callable[[int], int]


@dataclass(frozen=True)
class RecursionContext:
    w: int
    m: int = field(init=False)

    def __post_init__(self):
        if self.w < 1:
            raise UsageError("recursion context needs w >= 1")
        object.__setattr__(self, "m", self.w // 2)


def _omega_fn(G: Graph, omega: Optional[OmegaFn]) -> OmegaFn:
    return omega if omega is not None else (lambda S: clique_number(G, S))


def _ambient(G: Graph, within: Optional[int]) -> int:
    return G.vertices if within is None else within


def _separated(G: Graph, W: int, X: int, P: int, Q: int) -> bool:
    return not component_of(G, lowest(P), W & ~X) & Q


# -- minimal cutsets ----------------------------------------------------------


def minimalize_cutset(G: Graph, X: int, within: Optional[int] = None) -> int:
    """Shrink the cutset ``X`` of the connected graph ``G[within]`` to an inclusion-minimal one.

    Removals are attempted in increasing vertex id, restarting after each
    success: being a cutset is not monotone (putting vertices back can strand
    a new component), so a vertex that failed once may succeed later.  At the
    fixed point every vertex of ``X`` has a neighbour in every component of
    ``G - X``, which makes ``X`` inclusion-minimal.
    """
    W = _ambient(G, within)
    if X & ~W:
        raise UsageError("cutset is not inside the ambient vertex set")
    if not is_connected(G, W):
        raise UsageError("minimalize_cutset needs a connected graph")
    if len(components_of(G, W & ~X)) < 2:
        raise UsageError("given set is not a cutset")
    shrunk = True
    while shrunk:
        shrunk = False
        for x in members(X):
            trial = X & ~bit(x)
            if len(components_of(G, W & ~trial)) >= 2:
                X = trial
                shrunk = True
                break
    return X


# -- joints -------------------------------------------------------------------


@dataclass(frozen=True)
class LowChromatic:
    B: int
    omega: int


@dataclass(frozen=True)
class GrowthStep:
    v: int
    Z: int
    C: int


@dataclass
class JointResult:
    """``Y`` is complete to the component ``C`` of ``B - Y`` and ``omega(C) > m``."""

    Y: int
    C: int
    history: List[GrowthStep] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "Y": members(self.Y),
            "C": members(self.C),
            "history": [{"v": s.v, "Z": members(s.Z), "C": members(s.C)} for s in self.history],
        }


def _check_far_component(G: Graph, a: int, B: int, W: int) -> int:
    if not W >> a & 1:
        raise UsageError(f"vertex {a} is outside the ambient set")
    NA = G.adj[a] & W
    far = W & ~NA & ~bit(a)
    if B == 0 or B & ~far or component_of(G, lowest(B), far) != B:
        raise UsageError("B must be a component of G - N[a]")
    return NA


def grow_joint(
    G: Graph,
    a: int,
    B: int,
    ctx: RecursionContext,
    within: Optional[int] = None,
    omega: Optional[OmegaFn] = None,
):
    """Grow a joint of ``B`` until no neighbour of ``a`` can extend it.

    Returns ``LowChromatic`` when ``omega(B) <= m``, a :class:`JointResult`
    otherwise, or a :class:`P5Witness` ``a-v-z-p1-p2`` when some ``z`` is
    mixed on the component it should be complete to.

    On a ``JointResult`` every ``v`` in ``N(a)`` with a neighbour in ``C``
    leaves only components of clique number at most ``m`` in ``C - N(v)``.
    """
    W = _ambient(G, within)
    NA = _check_far_component(G, a, B, W)
    omega = _omega_fn(G, omega)
    adj = G.adj
    m = ctx.m
    wb = omega(B)
    if wb <= m:
        return LowChromatic(B, wb)

    Y, C = 0, B
    history: List[GrowthStep] = []
    while True:
        step = None
        for v in iter_members(NA):
            if not adj[v] & C:
                continue
            for Cp in components_of(G, C & ~adj[v]):
                if omega(Cp) > m:
                    step = (v, Cp)
                    break
            if step:
                break
        if step is None:
            return JointResult(Y, C, history)
        v, Cp = step
        Z = 0
        for z in iter_members(adj[v] & C):
            if adj[z] & Cp:
                Z |= 1 << z
        for z in iter_members(Z):
            r = mixed_edge_witness(G, z, Cp)
            if isinstance(r, Mixed):
                return P5Witness((a, v, z, r.a, r.b))
        Y |= Z
        C = Cp
        history.append(GrowthStep(v, Z, Cp))


# -- separating two cliques ---------------------------------------------------


@dataclass(frozen=True)
class Connected:
    pass


@dataclass
class CliqueSeparation:
    """A minimal separator of two anticomplete cliques, split by completeness.

    Every vertex of ``X_P`` is complete to ``A`` (the side holding P) and
    every vertex of ``X_Q`` to ``B``.  When ``w`` is the clique number of
    the graph both parts have clique number at most ``m``; ``low`` reports
    whether that held, since a caller-supplied context may understate ``w``.
    """

    X: int
    X_P: int
    X_Q: int
    A: int
    B: int
    omega_P: int
    omega_Q: int
    m: int

    @property
    def low(self) -> bool:
        return self.omega_P <= self.m and self.omega_Q <= self.m

    @property
    def parts(self) -> Tuple[int, int]:
        return self.X_P, self.X_Q

    def to_dict(self) -> dict:
        return {
            "X": members(self.X),
            "X_P": members(self.X_P),
            "X_Q": members(self.X_Q),
            "A": members(self.A),
            "B": members(self.B),
            "omega_X_P": self.omega_P,
            "omega_X_Q": self.omega_Q,
        }


def _as_mask(S) -> int:
    if isinstance(S, int):
        return S
    if hasattr(S, "mask"):
        return S.mask
    m = 0
    for v in S:
        m |= 1 << v
    return m


def _is_clique(G: Graph, S: int) -> bool:
    return all(G.adj[v] & S == S & ~bit(v) for v in iter_members(S))


def separate_cliques(
    G: Graph,
    P,
    Q,
    ctx: RecursionContext,
    within: Optional[int] = None,
    omega: Optional[OmegaFn] = None,
):
    """Separate cliques ``P`` and ``Q`` (each larger than ``m``) or explain why not.

    Returns ``Connected()`` when ``G[P | Q]`` is connected, a
    :class:`CliqueSeparation` when they can be cut apart, or the P5
    ``a2-a1-x-b1-b2`` when a separator vertex is mixed on both sides.
    """
    W = _ambient(G, within)
    P, Q = _as_mask(P), _as_mask(Q)
    omega = _omega_fn(G, omega)
    if not P or not Q or P & Q or (P | Q) & ~W:
        raise UsageError("P and Q must be disjoint nonempty subsets of the ambient set")
    if not (_is_clique(G, P) and _is_clique(G, Q)):
        raise UsageError("P and Q must be cliques")
    if popcount(P) <= ctx.m or popcount(Q) <= ctx.m:
        raise UsageError(f"cliques must have more than m={ctx.m} vertices")
    if is_connected(G, P | Q):
        return Connected()

    # separating two fixed sets is monotone in X, so one pass reaches minimality
    X = W & ~(P | Q)
    for x in members(X):
        trial = X & ~bit(x)
        if _separated(G, W, trial, P, Q):
            X = trial
    A = component_of(G, lowest(P), W & ~X)
    Bq = component_of(G, lowest(Q), W & ~X)

    XP = XQ = 0
    for x in iter_members(X):
        ra = mixed_edge_witness(G, x, A)
        if ra is COMPLETE:
            XP |= 1 << x
            continue
        rb = mixed_edge_witness(G, x, Bq)
        if rb is COMPLETE:
            XQ |= 1 << x
            continue
        # minimality gives x neighbours on both sides, so both are Mixed here
        return P5Witness((ra.b, ra.a, x, rb.a, rb.b))

    return CliqueSeparation(X, XP, XQ, A, Bq, omega(XP), omega(XQ), ctx.m)


# -- cutset partition ---------------------------------------------------------


@dataclass
class CutsetDecomposition:
    """Partition of one component ``B`` of ``G - X`` around a cutset vertex ``v``.

    ``R`` holds the components of ``B - N`` with clique number above ``m``,
    ``S`` the union of the rest, ``Y_parts[i]`` the vertices of ``N`` with a
    neighbour in ``R[i]``.  ``cover`` is an inclusion-minimal index set whose
    ``Y_parts`` cover ``Y``; ``reps[i]`` is ``(y_i, r_i)``.
    """

    v: int
    u: int
    B: int
    N: int
    R: List[int]
    S: int
    Y_parts: List[int]
    cover: List[int]
    reps: dict

    @property
    def Y(self) -> int:
        y = 0
        for part in self.Y_parts:
            y |= part
        return y

    @property
    def Z(self) -> int:
        z = self.N & ~self.Y
        for r in self.R:
            z |= r
        return z

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "u": self.u,
            "B": members(self.B),
            "N": members(self.N),
            "R": [members(r) for r in self.R],
            "S": members(self.S),
            "Y_parts": [members(y) for y in self.Y_parts],
            "cover": list(self.cover),
            "reps": {str(i): list(p) for i, p in self.reps.items()},
        }


def _minimal_cover(parts: List[int]) -> List[int]:
    target = 0
    for p in parts:
        target |= p
    chosen: List[int] = []
    covered = 0
    while covered != target:
        i = max(range(len(parts)), key=lambda j: (popcount(parts[j] & ~covered), -j))
        chosen.append(i)
        covered |= parts[i]
    # greedy picks can become redundant later; drop them newest first
    for i in reversed(list(chosen)):
        rest = 0
        for j in chosen:
            if j != i:
                rest |= parts[j]
        if rest == target:
            chosen.remove(i)
    return sorted(chosen)


def cutset_partition(
    G: Graph,
    X: int,
    B: int,
    ctx: RecursionContext,
    within: Optional[int] = None,
    omega: Optional[OmegaFn] = None,
    high: Optional[Callable[[int], bool]] = None,
):
    """Build the :class:`CutsetDecomposition` of component ``B`` of ``G - X``.

    ``X`` must be a minimal cutset of ``G[within]``.  Returns a P5 witness
    ``u-v-y-a-b`` when some ``y`` is mixed on its component, or
    ``r_i-y_i-v-y_j-r_j`` when two cover representatives are nonadjacent.
    ``high`` overrides the test deciding which components go to ``R``; it
    must imply clique number above ``m``.
    """
    W = _ambient(G, within)
    omega = _omega_fn(G, omega)
    adj = G.adj
    if X == 0 or X & ~W:
        raise UsageError("X must be a nonempty subset of the ambient set")
    comps = components_of(G, W & ~X)
    if len(comps) < 2 or B not in comps:
        raise UsageError("B must be a component of G - X and X a cutset")
    for x in iter_members(X):
        if any(not adj[x] & c for c in comps):
            raise UsageError(f"X is not a minimal cutset: {x} misses a component")

    m = ctx.m
    v = lowest(X)
    u = lowest(adj[v] & W & ~X & ~B)
    N = adj[v] & B
    R: List[int] = []
    S = 0
    for c in components_of(G, B & ~N):
        is_high = omega(c) > m and (high is None or high(c))
        if is_high:
            R.append(c)
        else:
            S |= c

    Y_parts = []
    for Ri in R:
        Yi = 0
        for y in iter_members(N):
            if adj[y] & Ri:
                Yi |= 1 << y
        Y_parts.append(Yi)
    for Ri, Yi in zip(R, Y_parts):
        for y in iter_members(Yi):
            r = mixed_edge_witness(G, y, Ri)
            if isinstance(r, Mixed):
                return P5Witness((u, v, y, r.a, r.b))

    cover = _minimal_cover(Y_parts) if R else []
    reps = {}
    for i in cover:
        others = 0
        for j in cover:
            if j != i:
                others |= Y_parts[j]
        reps[i] = (lowest(Y_parts[i] & ~others), lowest(R[i]))
    for idx, i in enumerate(cover):
        yi, ri = reps[i]
        for j in cover[idx + 1 :]:
            yj, rj = reps[j]
            if not adj[yi] >> yj & 1:
                return P5Witness((ri, yi, v, yj, rj))
    return CutsetDecomposition(v, u, B, N, R, S, Y_parts, cover, reps)


def clique_of_size(G: Graph, S: int, k: int) -> int:
    """Mask of ``k`` vertices of a maximum clique of ``G[S]`` (lowest ids first)."""
    q = max_clique_mask(G, S)
    if popcount(q) < k:
        raise UsageError(f"no clique of size {k} in the given set")
    out = 0
    for v in members(q)[:k]:
        out |= 1 << v
    return out
