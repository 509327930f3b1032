"""Blocks, low-order connectivity tests, separations, spanning trees."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GraphInputError, check
from .graph import Edge, Graph, edge_key


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges, isolated vertices),
    cut vertices, and the bipartite block/cut-vertex incidence structure.

    `tree_edges` pairs a block index with each cut vertex it contains.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def cut_vertices_in(self, block_index: int) -> list[int]:
        return sorted(c for i, c in self.tree_edges if i == block_index)


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative Hopcroft-Tarjan.

    Isolated vertices become singleton blocks so the blocks cover V as well
    as E.  Blocks are ordered by smallest contained vertex, then lexicographic.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    parent: list[int | None] = [None] * g.n
    cut: set[int] = set()
    edge_stack: list[Edge] = []
    raw_blocks: list[set[int]] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            raw_blocks.append({root})
            disc[root] = timer
            timer += 1
            continue
        root_children = 0
        # stack entries: (vertex, iterator position over sorted neighbors)
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        nbrs = {root: g.sorted_neighbors(root)}
        while stack:
            v, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, i + 1)
                w = nbrs[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    nbrs[w] = g.sorted_neighbors(w)
                    stack.append((w, 0))
                    if v == root:
                        root_children += 1
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        # u closes a block; pop its edges
                        comp: set[int] = set()
                        while edge_stack:
                            a, b = edge_stack[-1]
                            if disc[a] < disc[v] and a != u:
                                break
                            edge_stack.pop()
                            comp.add(a)
                            comp.add(b)
                            if (a, b) == (u, v):
                                break
                        raw_blocks.append(comp)
                        if u != root or root_children > 1:
                            cut.add(u)
        # a lone root with one child is not a cut vertex; handled above

    ordered = sorted(raw_blocks, key=lambda b: (min(b), sorted(b)))
    blks = tuple(frozenset(b) for b in ordered)
    tree = tuple(
        (i, c) for i, b in enumerate(blks) for c in sorted(b) if c in cut
    )
    return BlockDecomposition(blks, frozenset(cut), tree)


def is_two_connected(g: Graph) -> bool:
    """2-connected in the strict sense: at least 3 vertices, connected,
    no cut vertex."""
    if g.n < 3 or not g.is_connected():
        return False
    return len(blocks(g).blocks) == 1


def is_three_connected(g: Graph) -> bool:
    """True iff g is connected, has >= 4 vertices, and no vertex pair
    disconnects it.  Graphs on < 4 vertices report False by convention."""
    if g.n < 4 or not g.is_connected():
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            h, _ = g.induced(w for w in range(g.n) if w not in (u, v))
            if not h.is_connected():
                return False
    return True


@dataclass(frozen=True)
class Separation:
    """Cover of a graph by two proper induced subgraphs."""

    g1_vertices: frozenset[int]
    g2_vertices: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.g1_vertices & self.g2_vertices)

    @property
    def cut(self) -> frozenset[int]:
        return self.g1_vertices & self.g2_vertices


def find_two_separation(g: Graph) -> Separation | None:
    """A separation of order exactly 2 whose middle {u,v} is a minimum
    vertex cut.  Pairs are scanned lexicographically, so the result is
    deterministic.  Returns None when g is 3-connected (caller error) or
    too small."""
    if g.n < 4 or not g.is_connected():
        return None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            h, old_to_new = g.induced(w for w in range(g.n) if w not in (u, v))
            comps = h.connected_components()
            if len(comps) <= 1:
                continue
            new_to_old = {i: w for w, i in old_to_new.items()}
            first = {new_to_old[x] for x in comps[0]}
            rest = {
                new_to_old[x] for comp in comps[1:] for x in comp
            }
            side1 = frozenset(first | {u, v})
            side2 = frozenset(rest | {u, v})
            check(len(side1) < g.n and len(side2) < g.n, "separation sides must be proper")
            return Separation(side1, side2)
    return None


def bfs_spanning_tree(g: Graph, root: int = 0) -> set[Edge]:
    """Edge set of a deterministic BFS spanning tree of a connected graph."""
    if not g.is_connected():
        raise GraphInputError("spanning tree of a disconnected graph")
    tree: set[Edge] = set()
    seen = [False] * g.n
    seen[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in g.sorted_neighbors(x):
            if not seen[y]:
                seen[y] = True
                tree.add(edge_key(x, y))
                queue.append(y)
    return tree


def spanning_tree_fundamental_cycle(
    g: Graph, tree: set[Edge], e: Edge
) -> list[int]:
    """The unique cycle in tree + e, as an ordered vertex sequence starting
    and ending at e's endpoints (the closing edge e is implicit)."""
    e = edge_key(*e)
    if e in tree:
        raise GraphInputError(f"edge {e} already in the spanning tree")
    if e not in set(g.edges):
        raise GraphInputError(f"edge {e} not in the graph")
    adj: dict[int, list[int]] = {}
    for u, v in tree:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    a, b = e
    parent: dict[int, int | None] = {a: None}
    queue = [a]
    head = 0
    while head < len(queue) and b not in parent:
        x = queue[head]
        head += 1
        for y in sorted(adj.get(x, ())):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if b not in parent:
        raise GraphInputError("tree does not span the endpoints of e")
    path = [b]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path
