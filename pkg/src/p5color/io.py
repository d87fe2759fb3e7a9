"""graph6 and edge-list text formats."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .errors import Graph6Error, InputError
from .graph import Graph

HEADER = ">>graph6<<"
_EDGE_LIST_HEAD = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode {n} vertices")


def to_graph6(G: Graph, header: bool = False) -> str:
    """Encode ``G`` in graph6 (upper triangle, column order, 6 bits per byte)."""
    bits = []
    adj = G.adj
    for j in range(1, G.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return (HEADER if header else "") + _encode_size(G.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string.  Padding bits must be zero."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    data = []
    for k, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable graph6 range", base + k)
        data.append(c - 63)

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte length prefix", base + len(data))
        n, pos = 0, 8
        for x in data[2:8]:
            n = (n << 6) | x
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte length prefix", base + len(data))
        n, pos = 0, 4
        for x in data[1:4]:
            n = (n << 6) | x

    need = (n * (n - 1) // 2 + 5) // 6
    have = len(data) - pos
    if have != need:
        raise Graph6Error(f"expected {need} payload bytes for n={n}, found {have}", base + pos + min(have, need))

    rows = [0] * n
    i, j = 0, 1
    for k in range(need):
        x = data[pos + k]
        for shift in range(5, -1, -1):
            b = x >> shift & 1
            if j >= n:
                if b:
                    raise Graph6Error("nonzero padding bit", base + pos + k)
                continue
            if b:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("empty edge list")
    head = _EDGE_LIST_HEAD.match(lines[0])
    if not head:
        raise InputError(f"edge-list header must be 'n m', got {lines[0]!r}")
    n, m = int(head.group(1)), int(head.group(2))
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise InputError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edge_list(n, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect graph6 versus edge-list text.

    graph6 bytes never include ASCII digits, so a first line of two integers
    identifies the edge-list format.
    """
    for ln in text.splitlines():
        if ln.strip() and not ln.lstrip().startswith("#"):
            if _EDGE_LIST_HEAD.match(ln):
                return from_edge_list_text(text)
            return from_graph6(ln)
    raise InputError("no graph found in input")


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text())
