"""Unit-capacity flows: minimum edge cuts, edge- and vertex-disjoint paths.

Every cut in the recognition pipeline has at most five edges, so plain
BFS augmentation (Edmonds-Karp) is more than enough.  All adjacency is
built in sorted order to keep results deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import GraphInputError, check
from .graph import Edge, Graph


@dataclass(frozen=True)
class EdgeCut:
    """An exact edge cut E(X, Y): `edges` are precisely the edges of the
    host graph with one endpoint in each side."""

    edges: frozenset[Edge]
    side_a: frozenset[int]
    side_b: frozenset[int]

    def validate_against(self, g: Graph) -> None:
        check(
            self.side_a | self.side_b == set(range(g.n))
            and not (self.side_a & self.side_b),
            "cut sides must partition the vertex set",
        )
        crossing = {
            e for e in g.edges if (e[0] in self.side_a) != (e[1] in self.side_a)
        }
        check(crossing == set(self.edges), "cut edges must equal the crossing set")


def exact_cut(g: Graph, side_a: Iterable[int]) -> EdgeCut:
    """The cut E(X, V-X) for a given side X."""
    a = frozenset(side_a)
    b = frozenset(range(g.n)) - a
    edges = frozenset(e for e in g.edges if (e[0] in a) != (e[1] in a))
    return EdgeCut(edges, a, b)


class _Network:
    """Directed residual network with integer capacities.

    Arcs are stored in pairs: forward arcs get even ids, their residual
    twins odd ids.
    """

    def __init__(self, nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        i = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[u].append(i)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(i + 1)
        return i

    def flow_on(self, arc: int) -> int:
        return self.cap[arc ^ 1]

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            parent_arc = [-1] * len(self.adj)
            parent_arc[s] = -2
            queue = [s]
            head = 0
            while head < len(queue) and parent_arc[t] == -1:
                x = queue[head]
                head += 1
                for i in self.adj[x]:
                    y = self.to[i]
                    if self.cap[i] > 0 and parent_arc[y] == -1:
                        parent_arc[y] = i
                        queue.append(y)
            if parent_arc[t] == -1:
                break
            x = t
            while x != s:
                i = parent_arc[x]
                self.cap[i] -= 1
                self.cap[i ^ 1] += 1
                x = self.to[i ^ 1]
            flow += 1
        return flow

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for i in self.adj[x]:
                y = self.to[i]
                if self.cap[i] > 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


def _walk_paths(
    out: dict[int, list[int]], start_credits: list[tuple[int, int]]
) -> list[list[int]]:
    """Consume flow arcs into source->sink walks, then erase loops.

    `out` maps a node to its flow successors with multiplicity; a walk ends
    when its node has no remaining successor (only happens at sinks, by
    conservation).
    """
    paths = []
    for start, credit in start_credits:
        for _ in range(credit):
            walk = [start]
            x = start
            while out.get(x):
                x = out[x].pop(0)
                walk.append(x)
            path: list[int] = []
            pos: dict[int, int] = {}
            for v in walk:
                if v in pos:
                    for w in path[pos[v] + 1:]:
                        del pos[w]
                    del path[pos[v] + 1:]
                else:
                    pos[v] = len(path)
                    path.append(v)
            paths.append(path)
    return paths


def _edge_network(g: Graph, sources: set[int], sinks: set[int], cap_limit: int):
    net = _Network(g.n + 2)
    s, t = g.n, g.n + 1
    arc_of: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        arc_of[(u, v)] = net.add_arc(u, v, 1)
        arc_of[(v, u)] = net.add_arc(v, u, 1)
    source_arcs = {x: net.add_arc(s, x, cap_limit) for x in sorted(sources)}
    for x in sorted(sinks):
        net.add_arc(x, t, cap_limit)
    return net, s, t, arc_of, source_arcs


def min_edge_cut_between(
    g: Graph, sources: Iterable[int], sinks: Iterable[int]
) -> EdgeCut:
    """Minimum-cardinality edge cut separating sources from sinks,
    as an exact cut (X, Y) with X the residual source side.

    A minimum-cardinality cut leaves exactly two connected pieces, so the
    sides of the result are the components of g minus the cut.
    """
    src, snk = set(sources), set(sinks)
    if not src or not snk or src & snk:
        raise GraphInputError("sources and sinks must be disjoint and nonempty")
    limit = g.m + 1
    net, s, t, _, _ = _edge_network(g, src, snk, limit)
    net.max_flow(s, t, limit)
    reach = net.residual_reachable(s)
    cut = exact_cut(g, (x for x in range(g.n) if x in reach))
    check(src <= cut.side_a and snk <= cut.side_b, "flow cut must separate terminals")
    return cut


def edge_disjoint_paths(
    g: Graph, sources: Iterable[int], sinks: Iterable[int], k: int
) -> list[list[int]] | None:
    """k pairwise edge-disjoint source-sink paths (flow decomposition),
    or None if fewer exist."""
    src, snk = set(sources), set(sinks)
    if not src or not snk or src & snk:
        raise GraphInputError("sources and sinks must be disjoint and nonempty")
    net, s, t, arc_of, source_arcs = _edge_network(g, src, snk, g.m + 1)
    if net.max_flow(s, t, k) < k:
        return None
    out: dict[int, list[int]] = {}
    for u, v in g.edges:
        net_flow = net.flow_on(arc_of[(u, v)]) - net.flow_on(arc_of[(v, u)])
        if net_flow > 0:
            out.setdefault(u, []).append(v)
        elif net_flow < 0:
            out.setdefault(v, []).append(u)
    for u in out:
        out[u].sort()
    credits = [(x, net.flow_on(source_arcs[x])) for x in sorted(src)]
    paths = _walk_paths(out, credits)
    check(len(paths) == k and all(p[-1] in snk for p in paths), "flow decomposition")
    return paths


def _split_network(
    g: Graph,
    sources: set[int],
    sinks: set[int],
    source_cap: int,
    sink_cap: int,
):
    """Vertex-split network: v_in = 2v, v_out = 2v+1, internal capacity 1.

    Terminals are sealed: sinks get no outgoing graph arcs and sources no
    incoming ones, so no path passes through a terminal.
    """
    net = _Network(2 * g.n + 2)
    s, t = 2 * g.n, 2 * g.n + 1
    internal = {}
    for v in range(g.n):
        cap = source_cap if v in sources else sink_cap if v in sinks else 1
        internal[v] = net.add_arc(2 * v, 2 * v + 1, cap)
    graph_arcs = {}
    for u, v in g.edges:
        if u not in sinks and v not in sources:
            graph_arcs[(u, v)] = net.add_arc(2 * u + 1, 2 * v, 1)
        if v not in sinks and u not in sources:
            graph_arcs[(v, u)] = net.add_arc(2 * v + 1, 2 * u, 1)
    source_arcs = {x: net.add_arc(s, 2 * x, source_cap) for x in sorted(sources)}
    for x in sorted(sinks):
        net.add_arc(2 * x + 1, t, sink_cap)
    return net, s, t, internal, graph_arcs, source_arcs


def _split_paths(g, net, internal, graph_arcs, source_arcs, sources, k):
    out: dict[int, list[int]] = {}
    for v, arc in internal.items():
        for _ in range(net.flow_on(arc)):
            out.setdefault(2 * v, []).append(2 * v + 1)
    for (u, v), arc in graph_arcs.items():
        reverse = graph_arcs.get((v, u))
        net_flow = net.flow_on(arc) - (net.flow_on(reverse) if reverse is not None else 0)
        if net_flow > 0:
            out.setdefault(2 * u + 1, []).append(2 * v)
    for x in out:
        out[x].sort()
    credits = [(2 * x, net.flow_on(source_arcs[x])) for x in sorted(sources)]
    raw = _walk_paths(out, credits)
    check(len(raw) == k, "split-flow decomposition")
    collapsed = []
    for p in raw:
        q = [x // 2 for x in p]
        dedup = [q[0]]
        for v in q[1:]:
            if v != dedup[-1]:
                dedup.append(v)
        collapsed.append(dedup)
    return collapsed


def vertex_disjoint_paths(
    g: Graph, sources: Iterable[int], sinks: Iterable[int], k: int
) -> list[list[int]] | None:
    """k internally vertex-disjoint paths from the source set to the sink
    set, or None.

    A terminal set with several vertices spreads the paths over distinct
    vertices (each used at most once); a singleton terminal set is shared
    by all k paths, so singleton-to-singleton gives the classical
    internally disjoint u-v paths.  No path passes through a terminal.
    """
    src, snk = set(sources), set(sinks)
    if not src or not snk or src & snk:
        raise GraphInputError("sources and sinks must be disjoint and nonempty")
    src_cap = k if len(src) == 1 else 1
    snk_cap = k if len(snk) == 1 else 1
    net, s, t, internal, graph_arcs, source_arcs = _split_network(
        g, src, snk, src_cap, snk_cap
    )
    if net.max_flow(s, t, k) < k:
        return None
    return _split_paths(g, net, internal, graph_arcs, source_arcs, src, k)


def fan_paths(
    g: Graph, centre: int, targets: Iterable[int], k: int
) -> list[list[int]] | None:
    """k paths from `centre` to k distinct targets, pairwise sharing only
    the centre, or None.  The centre may not be a target."""
    tgt = set(targets)
    if centre in tgt:
        raise GraphInputError("centre cannot be one of the targets")
    net, s, t, internal, graph_arcs, source_arcs = _split_network(
        g, {centre}, tgt, k, 1
    )
    if net.max_flow(s, t, k) < k:
        return None
    return _split_paths(g, net, internal, graph_arcs, source_arcs, {centre}, k)
