"""Immutable simple-graph type and elementary transformations.

Vertices are the integers 0..n-1.  Every transforming operation returns a
fresh graph together with an old->new relabel map, so decision certificates
can be pulled back to the original input through any chain of reductions.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from ..errors import GraphInputError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an undirected edge to a sorted pair."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with sorted neighbor sets.

    Instances are immutable and hashable; all operations producing a new
    graph are pure functions.
    """

    __slots__ = ("n", "_adj", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphInputError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            e = edge_key(u, v)
            if e in seen:
                raise GraphInputError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._hash: int | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self._adj))

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- transformations (all return relabel maps where labels change) ---

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise GraphInputError(f"edge ({u},{v}) already present")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        return Graph(self.n, self._edges + (edge_key(u, v),))

    def without_edge(self, u: int, v: int) -> "Graph":
        e = edge_key(u, v)
        if e not in set(self._edges):
            raise GraphInputError(f"edge {e} not present")
        return Graph(self.n, tuple(f for f in self._edges if f != e))

    def without_edges(self, remove: Iterable[Edge]) -> "Graph":
        dead = {edge_key(u, v) for u, v in remove}
        return Graph(self.n, tuple(e for e in self._edges if e not in dead))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on `vertices`; returns (graph, old->new map)."""
        keep = sorted(set(vertices))
        old_to_new = {v: i for i, v in enumerate(keep)}
        es = [
            (old_to_new[u], old_to_new[v])
            for u, v in self._edges
            if u in old_to_new and v in old_to_new
        ]
        return Graph(len(keep), es), old_to_new

    def without_vertex(self, v: int) -> tuple["Graph", dict[int, int]]:
        return self.induced(u for u in range(self.n) if u != v)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if color[y] == -1:
                        color[y] = color[x] ^ 1
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
        return True


def identify_vertices(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Merge u and v into one vertex; parallel edges collapse, loops vanish.

    Returns (graph, old->new map); u and v map to the same new index.
    The result is always simple.
    """
    if u == v:
        raise GraphInputError("cannot identify a vertex with itself")
    keep = [w for w in range(g.n) if w != max(u, v)]
    old_to_new = {w: i for i, w in enumerate(keep)}
    old_to_new[max(u, v)] = old_to_new[min(u, v)]
    es = set()
    for a, b in g.edges:
        na, nb = old_to_new[a], old_to_new[b]
        if na != nb:
            es.add(edge_key(na, nb))
    return Graph(g.n - 1, sorted(es)), old_to_new


def union_of_edges(n: int, *edge_sets: Iterable[Edge]) -> Graph:
    """Graph on 0..n-1 whose edge set is the union of the given sets."""
    es = set()
    for group in edge_sets:
        for u, v in group:
            es.add(edge_key(u, v))
    return Graph(n, sorted(es))


def walk_is_path(g: Graph, seq: list[int]) -> bool:
    """True iff seq is a simple path in g (consecutive vertices adjacent)."""
    if len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def path_edges(seq: list[int]) -> list[Edge]:
    return [edge_key(a, b) for a, b in zip(seq, seq[1:])]


def bfs_path(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    banned_vertices: Iterable[int] = (),
    banned_edges: Iterable[Edge] = (),
) -> list[int] | None:
    """Shortest path from any source to any target, avoiding bans.

    Deterministic: BFS scans sorted sources and sorted neighbors.
    """
    src = sorted(set(sources))
    tgt = set(targets)
    dead_v = set(banned_vertices)
    dead_e = {edge_key(u, v) for u, v in banned_edges}
    parent: dict[int, int | None] = {}
    queue = []
    for s in src:
        if s in dead_v:
            continue
        parent[s] = None
        if s in tgt:
            return [s]
        queue.append(s)
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in g.sorted_neighbors(x):
            if y in parent or y in dead_v or edge_key(x, y) in dead_e:
                continue
            parent[y] = x
            if y in tgt:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(y)
    return None


def iter_edge_sets_components(
    edges: Iterable[Edge],
) -> Iterator[tuple[set[int], set[Edge]]]:
    """Connected components of the subgraph formed by an edge list.

    Yields (vertex set, edge set) pairs ordered by smallest vertex.
    Vertices are only those incident to the given edges.
    """
    adj: dict[int, set[int]] = {}
    es = {edge_key(u, v) for u, v in edges}
    for u, v in es:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        comp_v = {start}
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp_v.add(y)
                    stack.append(y)
        comp_e = {e for e in es if e[0] in comp_v}
        yield comp_v, comp_e
