"""Exact isomorphism for small graphs via degree-pruned backtracking.

Only ever needed against fixed graphs on at most 10 vertices (plus test
cross-checks), so a guarded matcher suffices; no canonical-form machinery
lives here.
"""

from __future__ import annotations

from ..errors import SizeGuardError
from .graph import Graph

SIZE_GUARD = 16


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection g->h preserving adjacency exactly, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    if n == 0:
        return {}

    # Order g's vertices so each one (after the first) touches a placed
    # vertex when possible; rare disconnected leftovers are appended.
    order: list[int] = []
    placed_set: set[int] = set()
    pool = sorted(range(n), key=lambda v: (-g.degree(v), v))
    while len(order) < n:
        nxt = next(
            (v for v in pool if v not in placed_set and
             (not order or g.neighbors(v) & placed_set)),
            None,
        )
        if nxt is None:
            nxt = next(v for v in pool if v not in placed_set)
        order.append(nxt)
        placed_set.add(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        deg = g.degree(v)
        for w in range(n):
            if w in used or h.degree(w) != deg:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return mapping if extend(0) else None


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism decision, guarded to graphs on <= 16 vertices."""
    if g.n > SIZE_GUARD or h.n > SIZE_GUARD:
        raise SizeGuardError(
            f"isomorphism guard: {g.n}, {h.n} exceed {SIZE_GUARD} vertices"
        )
    return find_isomorphism(g, h) is not None
