"""Certifying recursive colouring of P5-free graphs within ``floor(f(omega))`` colours.

The recursion, on a connected graph ``G`` with clique number ``w > 4`` and
``m = w // 2``:

* colour ``N(a)`` for a chosen vertex ``a`` with ``F(w-1)`` colours;
* colour every component ``B`` of ``G - N[a]`` in a shared block of
  ``(w - m + 2) F(m)`` colours through a maximal joint ``(Y, C)``;
* when a component cannot be finished that way, the objects at hand form a
  cutset whose two parts have clique number at most ``m``; then colour
  ``G - X`` by the cutset partition in ``F(w-1) + w F(m)`` colours and each
  part of ``X`` in ``F(m)``.

Here ``F = color_budget``.  Both totals fit in ``F(w)`` because
``f(w-1) + (w+2) f(m) <= f(w)`` for every ``w >= 5``.  Any failure of a
structural claim surfaces as an induced P5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .bound import OMEGA_BASE, color_budget
from .decompose import (
    CliqueSeparation,
    Connected,
    CutsetDecomposition,
    LowChromatic,
    RecursionContext,
    clique_of_size,
    cutset_partition,
    grow_joint,
    minimalize_cutset,
    separate_cliques,
)
from .errors import IntegrityError, OracleBudgetError, UsageError
from .graph import Graph, bit, components_of, is_connected, iter_members, lowest, members, popcount
from .oracles import (
    Coloring,
    P5Witness,
    clique_number,
    default_budget,
    dsatur_map,
    exact_chromatic_map,
    find_induced_p5,
)

# rules whose node budget is F(omega of the node's vertex set)
RECURSIVE_RULES = frozenset(
    {"empty", "base-exact", "heuristic-met-budget", "disconnected", "neighborhood-split", "clique-fallback", "cutset-fallback"}
)
STRUCTURAL_RULES = frozenset({"joint-branch", "cutset-component", "exact-classified"})


@dataclass
class ColorOptions:
    omega_base: int = OMEGA_BASE
    base_size: int = 20
    fast_path: bool = True
    oracle_budget: Optional[int] = None
    recognize: bool = False
    # experimental: a high-clique component whose exact chromatic number is
    # still within F(m) is treated as low in the cutset partition
    chi_classify: bool = False
    apex: str = "max-degree"

    def __post_init__(self):
        if self.omega_base < OMEGA_BASE:
            raise UsageError(f"omega_base below {OMEGA_BASE} breaks the budget recursion")
        if self.apex not in ("max-degree", "min-id"):
            raise UsageError(f"unknown apex rule {self.apex!r}")


@dataclass
class TraceNode:
    rule: str
    vertices: int
    omega: int
    budget: int
    used: int = 0
    offset: int = 0
    slot: Optional[str] = None
    slots: List[Tuple[str, int]] = field(default_factory=list)
    children: List["TraceNode"] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "rule": self.rule,
            "vertices": members(self.vertices),
            "omega": self.omega,
            "budget": self.budget,
            "used": self.used,
            "offset": self.offset,
        }
        if self.slot is not None:
            d["slot"] = self.slot
        if self.slots:
            d["slots"] = [[name, cap] for name, cap in self.slots]
        if self.info:
            d["info"] = self.info
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TraceNode":
        mask = 0
        for v in d["vertices"]:
            mask |= 1 << v
        return cls(
            rule=d["rule"],
            vertices=mask,
            omega=d["omega"],
            budget=d["budget"],
            used=d["used"],
            offset=d.get("offset", 0),
            slot=d.get("slot"),
            slots=[(name, cap) for name, cap in d.get("slots", [])],
            children=[cls.from_dict(c) for c in d.get("children", [])],
            info=d.get("info", {}),
        )

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def rule_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for node in self.walk():
            counts[node.rule] = counts.get(node.rule, 0) + 1
        return dict(sorted(counts.items()))


@dataclass
class ColoringCertificate:
    coloring: Coloring
    omega: int
    budget: int
    trace: TraceNode

    @property
    def num_colors(self) -> int:
        return self.coloring.num_colors

    def to_dict(self) -> dict:
        return {
            "omega": self.omega,
            "budget": self.budget,
            "colors": self.num_colors,
            "assignment": list(self.coloring.color_of),
            "trace": self.trace.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ColoringCertificate":
        return cls(Coloring(tuple(d["assignment"])), d["omega"], d["budget"], TraceNode.from_dict(d["trace"]))


@dataclass(frozen=True)
class FallbackCutset:
    """A cutset found while colouring one component, split into two low-clique parts."""

    rule: str
    parts: Tuple[int, int]
    info: dict


class _FoundP5(Exception):
    def __init__(self, witness: P5Witness):
        super().__init__(witness.path)
        self.witness = witness


ColorResult = Tuple[Dict[int, int], TraceNode]


def _place(into: Dict[int, int], col: Dict[int, int], offset: int) -> None:
    for v, c in col.items():
        into[v] = c + offset


class _Colorer:
    def __init__(self, G: Graph, options: ColorOptions):
        self.G = G
        self.opt = options
        self.budget = default_budget() if options.oracle_budget is None else options.oracle_budget
        self._omega: Dict[int, int] = {}
        self._chi: Dict[int, Optional[int]] = {}

    def omega(self, S: int) -> int:
        w = self._omega.get(S)
        if w is None:
            w = clique_number(self.G, S, self.budget)
            self._omega[S] = w
        return w

    def _witness(self, wit) -> None:
        if isinstance(wit, P5Witness):
            raise _FoundP5(wit)

    def _fits(self, node: TraceNode, capacity: int, where: str) -> None:
        if node.budget > capacity or node.used > capacity:
            raise IntegrityError(f"{where}: sub-colouring needs {node.used}/{node.budget} colours, slot holds {capacity}")

    # -- recursive entry ------------------------------------------------------

    def color(self, S: int) -> ColorResult:
        if S == 0:
            return {}, TraceNode("empty", 0, 0, 0)
        w = self.omega(S)
        F = color_budget(w)
        comps = components_of(self.G, S)
        if len(comps) > 1:
            col: Dict[int, int] = {}
            node = TraceNode("disconnected", S, w, F, slots=[("components", F)])
            for c in comps:
                cc, child = self.color(c)
                child.slot = "components"
                col.update(cc)
                node.used = max(node.used, child.used)
                node.children.append(child)
            return col, node
        if self.opt.fast_path:
            d = dsatur_map(self.G, S)
            k = max(d.values()) + 1
            if k <= F:
                return d, TraceNode("heuristic-met-budget", S, w, F, used=k)
        if w <= self.opt.omega_base or popcount(S) <= self.opt.base_size:
            return self._base(S, w, F)
        return self._split(S, w, F)

    def _base(self, S: int, w: int, F: int) -> ColorResult:
        try:
            chi, col = exact_chromatic_map(self.G, S, self.budget)
            rule = "base-exact"
        except OracleBudgetError:
            col = dsatur_map(self.G, S)
            chi = max(col.values()) + 1
            rule = "heuristic-met-budget"
            if chi > F:
                wit = find_induced_p5(self.G, S)
                if wit is not None:
                    raise _FoundP5(wit)
                raise
        if chi > F:
            wit = find_induced_p5(self.G, S)
            if wit is not None:
                raise _FoundP5(wit)
            raise IntegrityError(f"P5-free subgraph with omega={w} needs {chi} > {F} colours")
        return col, TraceNode(rule, S, w, F, used=chi)

    # -- main branch ----------------------------------------------------------

    def _apex(self, S: int) -> int:
        if self.opt.apex == "min-id":
            return lowest(S)
        adj = self.G.adj
        return max(iter_members(S), key=lambda v: (popcount(adj[v] & S), -v))

    def _split(self, S: int, w: int, F: int) -> ColorResult:
        G = self.G
        ctx = RecursionContext(w)
        m = ctx.m
        Fm, Fw1 = color_budget(m), color_budget(w - 1)
        a = self._apex(S)
        NA = G.adj[a] & S
        far = S & ~NA & ~bit(a)
        Bs = components_of(G, far)

        b_results: List[ColorResult] = []
        for B in Bs:
            r = self.color_via_joint(S, a, B, ctx)
            if isinstance(r, FallbackCutset):
                return self._fallback(S, w, F, ctx, r)
            b_results.append(r)

        na_col, na_node = self.color(NA)
        na_node.slot = "N(a)"
        self._fits(na_node, Fw1, "N(a)")
        col = dict(na_col)
        node = TraceNode("neighborhood-split", S, w, F, info={"a": a})
        node.children.append(na_node)
        base = na_node.used
        if Bs:
            cap = (w - m + 2) * Fm
            node.slots = [("N(a)", Fw1), ("B", cap)]
            region = 0
            for bc, bn in b_results:
                bn.slot, bn.offset = "B", base
                self._fits(bn, cap, "component of G - N[a]")
                _place(col, bc, base)
                region = max(region, bn.used)
                node.children.append(bn)
            col[a] = base  # a is anticomplete to every B
            node.used = base + region
        else:
            node.slots = [("N(a)", Fw1), ("a", 1)]
            col[a] = base
            node.used = base + 1
        node.info["own"] = [a]
        if node.used > F:
            raise IntegrityError(f"neighbourhood split used {node.used} > {F} colours")
        return col, node

    def color_via_joint(self, S: int, a: int, B: int, ctx: RecursionContext):
        """Colour component ``B`` of ``G[S] - N[a]`` in ``(w - m + 2) F(m)`` colours, or report a cutset."""
        G = self.G
        adj = G.adj
        w, m = ctx.w, ctx.m
        Fm = color_budget(m)
        r = grow_joint(G, a, B, ctx, within=S, omega=self.omega)
        self._witness(r)
        if isinstance(r, LowChromatic):
            col, node = self.color(B)
            self._fits(node, Fm, "low component")
            return col, node

        Y, C = r.Y, r.C
        X = 0
        for v in iter_members(adj[a] & S):
            if adj[v] & C:
                X |= 1 << v
        info = {"w": w, "a": a, "Y": members(Y), "C": members(C), "X": members(X), "growth": len(r.history)}
        if self.omega(X) < w - m:
            # X and Y both have clique number <= m and together cut C off from a
            return FallbackCutset("cutset-fallback", (X, Y), info)

        P = clique_of_size(G, X, w - m)
        info["P"] = members(P)
        rest = B & ~C & ~Y
        if rest and self.omega(rest) > m:
            Pc = clique_of_size(G, C, m + 1)
            Qc = clique_of_size(G, rest, m + 1)
            sep = separate_cliques(G, Pc, Qc, ctx, within=S, omega=self.omega)
            self._witness(sep)
            if isinstance(sep, Connected):
                raise IntegrityError("cliques in C and in B - C - Y cannot be joined")
            if not sep.low:
                raise IntegrityError(f"separator parts have clique numbers {sep.omega_P}, {sep.omega_Q} above m={m}")
            info.update({"clique_C": members(Pc), "clique_rest": members(Qc), "separator": sep.to_dict()})
            return FallbackCutset("clique-fallback", sep.parts, info)

        p_list = members(P)
        node = TraceNode(
            "joint-branch",
            B,
            self.omega(B),
            (w - m + 2) * Fm,
            slots=[("Y", Fm), ("C0", Fm)] + [(f"C[{p}]", Fm) for p in p_list],
            info=info,
        )
        col: Dict[int, int] = {}
        offset = 0

        def put(mask: int, slot: str) -> int:
            c, child = self.color(mask)
            self._fits(child, Fm, f"joint slot {slot}")
            child.slot, child.offset = slot, offset
            _place(col, c, offset)
            node.children.append(child)
            return child.used

        if Y:
            offset += put(Y, "Y")
        complete_to_P = C
        for p in p_list:
            complete_to_P &= adj[p]
        shared = 0
        for mask in (complete_to_P, rest):
            if mask:
                shared = max(shared, put(mask, "C0"))
        offset += shared
        remaining = C & ~complete_to_P
        for p in p_list:
            part = remaining & ~adj[p]
            remaining &= ~part
            if part:
                offset += put(part, f"C[{p}]")
        if remaining:
            raise IntegrityError("joint branch left vertices of C uncoloured")
        node.used = offset
        return col, node

    # -- cutset fallback ------------------------------------------------------

    def _fallback(self, S: int, w: int, F: int, ctx: RecursionContext, fb: FallbackCutset) -> ColorResult:
        G = self.G
        m = ctx.m
        Fm, Fw1 = color_budget(m), color_budget(w - 1)
        X = minimalize_cutset(G, fb.parts[0] | fb.parts[1], within=S)
        parts = (fb.parts[0] & X, fb.parts[1] & X)
        cap = Fw1 + w * Fm
        info = dict(fb.info)
        info["cutset"] = members(X)
        node = TraceNode(fb.rule, S, w, F, slots=[("G-X", cap), ("X1", Fm), ("X2", Fm)], info=info)
        col: Dict[int, int] = {}
        region = 0
        for B in components_of(G, S & ~X):
            bc, bn = self.color_via_cutset(S, X, B, ctx)
            bn.slot = "G-X"
            self._fits(bn, cap, "component of G - X")
            _place(col, bc, 0)
            region = max(region, bn.used)
            node.children.append(bn)
        offset = region
        for name, part in zip(("X1", "X2"), parts):
            if part:
                c, child = self.color(part)
                self._fits(child, Fm, f"cutset part {name}")
                child.slot, child.offset = name, offset
                _place(col, c, offset)
                node.children.append(child)
                offset += child.used
        node.used = offset
        if node.used > F:
            raise IntegrityError(f"cutset fallback used {node.used} > {F} colours")
        return col, node

    def _high(self, m: int):
        if not self.opt.chi_classify:
            return None
        Fm = color_budget(m)

        def high(c: int) -> bool:
            if c not in self._chi:
                try:
                    self._chi[c] = exact_chromatic_map(self.G, c, self.budget)[0]
                except OracleBudgetError:
                    self._chi[c] = None
            chi = self._chi[c]
            return chi is None or chi > Fm

        return high

    def color_via_cutset(self, S: int, X: int, B: int, ctx: RecursionContext) -> ColorResult:
        """Colour component ``B`` of ``G[S] - X`` in ``F(w-1) + w F(m)`` colours."""
        G = self.G
        w, m = ctx.w, ctx.m
        Fm, Fw1 = color_budget(m), color_budget(w - 1)
        d = cutset_partition(G, X, B, ctx, within=S, omega=self.omega, high=self._high(m))
        self._witness(d)
        node = TraceNode(
            "cutset-component",
            B,
            self.omega(B),
            Fw1 + w * Fm,
            slots=[("Z", Fw1), ("S", Fm)] + [(f"Y[{i}]", Fm) for i in d.cover],
            info={"w": w, "decomposition": d.to_dict()},
        )
        col: Dict[int, int] = {}
        offset = 0

        def put(mask: int, slot: str, cap: int, at: int) -> int:
            c, child = self.color(mask)
            self._fits(child, cap, f"cutset slot {slot}")
            child.slot, child.offset = slot, at
            _place(col, c, at)
            node.children.append(child)
            return child.used

        Z = d.Z
        if Z:
            offset += put(Z, "Z", Fw1, offset)
        if d.S:
            low = 0
            used = 0
            for comp in components_of(G, d.S):
                if self.omega(comp) <= m:
                    low |= comp
                    continue
                # chi_classify only: high clique number, chromatic number within F(m)
                chi, c = exact_chromatic_map(G, comp, self.budget)
                child = TraceNode("exact-classified", comp, self.omega(comp), Fm, used=chi, slot="S", offset=offset)
                self._fits(child, Fm, "classified component")
                _place(col, c, offset)
                node.children.append(child)
                used = max(used, chi)
            if low:
                used = max(used, put(low, "S", Fm, offset))
            offset += used
        assigned = 0
        for i in d.cover:
            part = d.Y_parts[i] & ~assigned
            assigned |= part
            if part:
                offset += put(part, f"Y[{i}]", Fm, offset)
        node.used = offset
        return col, node


def _certificate(G: Graph, col: Dict[int, int], node: TraceNode) -> ColoringCertificate:
    coloring = Coloring.from_mapping(G.n, col)
    return ColoringCertificate(coloring, node.omega, node.budget, node)


def color_p5free(G: Graph, options: Optional[ColorOptions] = None):
    """Colour ``G`` within ``color_budget(omega(G))`` colours.

    Returns a :class:`ColoringCertificate`, or a :class:`P5Witness` when the
    input is not P5-free and the algorithm ran into the obstruction (with
    ``options.recognize`` the input is screened first).
    """
    opt = options or ColorOptions()
    if opt.recognize:
        wit = find_induced_p5(G)
        if wit is not None:
            return wit
    colorer = _Colorer(G, opt)
    try:
        col, node = colorer.color(G.vertices)
    except _FoundP5 as found:
        return found.witness
    return _certificate(G, col, node)


def color_component_via_joint(G: Graph, a: int, B: int, ctx: RecursionContext, options: Optional[ColorOptions] = None):
    """Colour the component ``B`` of ``G - N[a]`` through a joint.

    Returns ``(coloring, trace)``, a :class:`FallbackCutset` or a
    :class:`P5Witness`.  ``ctx.w`` should be ``omega(G)``.
    """
    if not is_connected(G, G.vertices):
        raise UsageError("color_component_via_joint needs a connected graph")
    colorer = _Colorer(G, options or ColorOptions())
    try:
        r = colorer.color_via_joint(G.vertices, a, B, ctx)
    except _FoundP5 as found:
        return found.witness
    if isinstance(r, FallbackCutset):
        return r
    col, node = r
    return Coloring.from_mapping(G.n, col), node


def color_via_cutset(G: Graph, X: int, ctx: RecursionContext, options: Optional[ColorOptions] = None):
    """Colour ``G - X`` for a minimal cutset ``X`` of the connected graph ``G``.

    Components share one palette.  Returns ``(coloring, nodes)`` with ``-1``
    on ``X``, or a :class:`P5Witness`.
    """
    colorer = _Colorer(G, options or ColorOptions())
    col: Dict[int, int] = {}
    nodes = []
    try:
        for B in components_of(G, G.vertices & ~X):
            c, node = colorer.color_via_cutset(G.vertices, X, B, ctx)
            col.update(c)
            nodes.append(node)
    except _FoundP5 as found:
        return found.witness
    return Coloring.from_mapping(G.n, col), nodes


# -- verification ---------------------------------------------------------------


@dataclass
class VerificationReport:
    ok: bool
    message: str = "ok"
    checked_nodes: int = 0

    def to_dict(self) -> dict:
        return {"ok": self.ok, "message": self.message, "checked_nodes": self.checked_nodes}


class _Violation(Exception):
    pass


def _expected_slots(node: TraceNode) -> Optional[Dict[str, int]]:
    rule = node.rule
    if rule in ("neighborhood-split", "clique-fallback", "cutset-fallback"):
        w = node.omega
    elif rule in ("joint-branch", "cutset-component"):
        w = node.info.get("w")
        if w is None:
            raise _Violation(f"{rule} node lacks its ambient clique number")
    elif rule == "disconnected":
        return {"components": node.budget}
    else:
        return None
    m = w // 2
    Fm, Fw1 = color_budget(m), color_budget(w - 1)
    if rule == "neighborhood-split":
        return {"N(a)": Fw1, "B": (w - m + 2) * Fm, "a": 1}
    if rule in ("clique-fallback", "cutset-fallback"):
        return {"G-X": Fw1 + w * Fm, "X1": Fm, "X2": Fm}
    if rule == "joint-branch":
        if node.budget != (w - m + 2) * Fm or len(node.slots) > w - m + 2:
            raise _Violation("joint-branch block does not match (w - m + 2) F(m)")
        return {name: Fm for name, _ in node.slots}
    if node.budget != Fw1 + w * Fm:
        raise _Violation("cutset-component block does not match F(w-1) + w F(m)")
    if len(node.slots) > w + 1:
        raise _Violation("cutset-component uses more than w - 1 neighbour-cover slots")
    return {name: (Fw1 if name == "Z" else Fm) for name, _ in node.slots}


def _check_node(G: Graph, colors, node: TraceNode, base: int, anc: int, deep: bool, counter: List[int]) -> None:
    counter[0] += 1
    rule = node.rule
    if rule not in RECURSIVE_RULES and rule not in STRUCTURAL_RULES:
        raise _Violation(f"unknown rule {rule!r}")
    if node.used > node.budget:
        raise _Violation(f"node budget exceeded: {rule} uses {node.used} > {node.budget}")
    for v in iter_members(node.vertices):
        c = colors[v]
        if not base <= c < base + node.used:
            raise _Violation(f"colors outside palette range at vertex {v} ({rule} node, range [{base}, {base + node.used}))")
    if rule in RECURSIVE_RULES:
        if node.vertices and node.vertices == anc:
            raise _Violation(f"recursive call on an unchanged vertex set ({rule})")
        if deep and node.omega != clique_number(G, node.vertices):
            raise _Violation(f"recorded omega {node.omega} wrong for {rule} node")
        if node.budget != color_budget(node.omega):
            raise _Violation(f"budget mismatch: {rule} node claims {node.budget}, F({node.omega}) = {color_budget(node.omega)}")
        anc = node.vertices

    caps = dict(node.slots)
    if sum(caps.values()) > node.budget:
        raise _Violation(f"sub-budget arithmetic fails at {rule}: {sum(caps.values())} > {node.budget}")
    expected = _expected_slots(node)
    if expected is not None:
        for name, cap in caps.items():
            key = name if name in expected else None
            if key is None or expected[key] != cap:
                raise _Violation(f"slot {name!r} of {rule} has capacity {cap}, expected {expected.get(name)}")
    seen = 0
    slot_offset: Dict[str, int] = {}
    slot_used: Dict[str, int] = {}
    for child in node.children:
        if child.vertices & ~node.vertices:
            raise _Violation(f"child of {rule} leaves the parent vertex set")
        if child.vertices & seen:
            raise _Violation(f"children of {rule} overlap")
        seen |= child.vertices
        if child.slot not in caps:
            raise _Violation(f"child slot {child.slot!r} not declared by {rule}")
        cap = caps[child.slot]
        if child.budget > cap or child.used > cap:
            raise _Violation(f"child in slot {child.slot!r} exceeds capacity {cap}")
        if slot_offset.setdefault(child.slot, child.offset) != child.offset:
            raise _Violation(f"components sharing slot {child.slot!r} use different offsets")
        slot_used[child.slot] = max(slot_used.get(child.slot, 0), child.used)
        _check_node(G, colors, child, base + child.offset, anc, deep, counter)
    spans = sorted((slot_offset[s], slot_offset[s] + slot_used[s]) for s in slot_offset if slot_used[s])
    for (lo1, hi1), (lo2, _) in zip(spans, spans[1:]):
        if lo2 < hi1:
            raise _Violation(f"slot colour ranges overlap in {rule} node")
    own = set(node.info.get("own", [])) if isinstance(node.info, dict) else set()
    leftover = set(members(node.vertices & ~seen))
    if node.children and leftover != own:
        raise _Violation(f"{rule} node leaves vertices {sorted(leftover - own)} outside its children")


def verify_certificate(G: Graph, cert: ColoringCertificate, deep: bool = True) -> VerificationReport:
    """Independent check of a certificate against ``G``; reports the first violation."""
    counter = [0]
    try:
        col = cert.coloring.color_of
        if len(col) != G.n:
            raise _Violation(f"assignment has {len(col)} entries for {G.n} vertices")
        if any(c < 0 for c in col):
            raise _Violation("uncoloured vertex")
        for u, v in G.edges():
            if col[u] == col[v]:
                raise _Violation(f"improper edge ({u}, {v}) with color {col[u]}")
        for c in range(cert.num_colors):
            cls = [v for v in range(G.n) if col[v] == c]
            for i, u in enumerate(cls):
                if G.adj[u] & sum(1 << x for x in cls[i + 1 :]):
                    raise _Violation(f"color class {c} is not independent")
        w = clique_number(G)
        if cert.omega != w:
            raise _Violation(f"omega mismatch: certificate says {cert.omega}, graph has {w}")
        if cert.num_colors > cert.budget:
            raise _Violation(f"budget exceeded: {cert.num_colors} colors > budget {cert.budget}")
        if cert.budget != color_budget(w):
            raise _Violation(f"budget mismatch: certificate budget {cert.budget} != F({w}) = {color_budget(w)}")
        root = cert.trace
        if root.vertices != G.vertices:
            raise _Violation("trace root does not cover the graph")
        if root.omega != w or root.budget != cert.budget:
            raise _Violation("trace root disagrees with certificate header")
        _check_node(G, col, root, 0, -1, deep, counter)
    except _Violation as exc:
        return VerificationReport(False, str(exc), counter[0])
    return VerificationReport(True, "ok", counter[0])
