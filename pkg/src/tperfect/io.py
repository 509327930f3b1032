"""Graph ingestion and serialization: graph6 and edge-list formats.

graph6 is the standard bit-packed upper-triangle encoding (column by
column), used because the exceptional-graph fixtures and external graph
catalogues ship in it; edge lists ("n m" header, one "u v" pair per line)
are kept for human authoring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core.graph import Graph
from .errors import GraphInputError

FORMATS = ("graph6", "edge-list")


@dataclass(frozen=True)
class GraphDocument:
    format: str
    payload: str
    name: str | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise GraphInputError(f"unknown format {self.format!r}")


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphInputError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphInputError("graph too large for this graph6 writer")


def _decode_n(s: str) -> tuple[int, int]:
    """Returns (n, number of header characters consumed)."""
    if not s:
        raise GraphInputError("empty graph6 payload")
    c = ord(s[0]) - 63
    if c < 0 or c > 63:
        raise GraphInputError(f"bad graph6 header byte {s[0]!r}")
    if s[0] != "~":
        return c, 1
    if len(s) >= 4 and s[1] != "~":
        vals = [ord(ch) - 63 for ch in s[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphInputError("bad graph6 extended header")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    raise GraphInputError("unsupported graph6 size header")


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(n) + "".join(chars)


def graph6_to_graph(payload: str) -> Graph:
    payload = payload.strip()
    if payload.startswith(">>graph6<<"):
        payload = payload[len(">>graph6<<") :]
    n, consumed = _decode_n(payload)
    body = payload[consumed:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphInputError(
            f"graph6 body length {len(body)} does not match n={n} (need {need})"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise GraphInputError(f"bad graph6 byte {ch!r}")
        bits.extend((val >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    if any(bits[i:]):
        raise GraphInputError("nonzero padding bits in graph6 payload")
    return Graph(n, edges)


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def edge_list_to_graph(payload: str) -> Graph:
    rows = [ln.strip() for ln in payload.splitlines() if ln.strip()]
    if not rows:
        raise GraphInputError("empty edge-list payload")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphInputError(f"malformed header {rows[0]!r} (expected 'n m')")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphInputError(f"malformed header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise GraphInputError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphInputError(f"malformed edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)  # range/loop/duplicate checks live in Graph


def parse(doc: GraphDocument) -> Graph:
    if not doc.payload.strip():
        raise GraphInputError("empty payload")
    if doc.format == "graph6":
        return graph6_to_graph(doc.payload)
    return edge_list_to_graph(doc.payload)


def serialize(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return graph_to_graph6(g)
    if fmt == "edge-list":
        return graph_to_edge_list(g)
    raise GraphInputError(f"unknown format {fmt!r}")
