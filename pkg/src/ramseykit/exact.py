"""Exact Ramsey computation on tiny instances.

find_witness runs a DFS over the edges of K_n in lexicographic order,
branching red before blue and pruning a branch as soon as the partially fixed
red edges contain a copy of H or the blue ones a copy of G.  Every leaf
reached is therefore a witness coloring (no red H, no blue G), and absence is
exhaustive.  The convention throughout is red-H (the clique side in all the
bound formulas) and blue-G.

Containment checks are incremental: after fixing an edge only copies using
that edge are searched for, with a bitmask fast path when the pattern is a
complete graph.
"""
from __future__ import annotations

from .detect import find_copy
from .errors import CapacityError, InputError
from .graphs import Graph, TwoColoring

DEFAULT_EDGE_CAP = 36


def is_witness(col: TwoColoring, H: Graph, G: Graph) -> bool:
    """True iff the coloring has no red copy of H and no blue copy of G."""
    return (
        find_copy(col, "red", H) is None
        and find_copy(col, "blue", G) is None
    )


class _Pattern:
    """Static pattern data for pinned-edge containment checks."""

    __slots__ = ("n", "edges", "adj", "deg", "clique_order")

    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = sorted(g.edges)
        self.adj = g.adjacency_sets()
        self.deg = g.degrees()
        is_complete = g.n >= 2 and g.edge_count == g.n * (g.n - 1) // 2
        self.clique_order = g.n if is_complete else 0


def _clique_in_mask(adj: list[int], cand: int, t: int) -> bool:
    """Does `cand` contain a t-clique of the host graph?"""
    if t <= 0:
        return True
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if _clique_in_mask(adj, cand & adj[v] & (-1 << (v + 1)), t - 1):
            return True
    return False


def _complete_pinned(adj: list[int], pat: _Pattern, u: int, v: int) -> bool:
    common = adj[u] & adj[v] & ~((1 << u) | (1 << v))
    return _clique_in_mask(adj, common, pat.clique_order - 2)


def _generic_pinned(adj: list[int], n: int, pat: _Pattern, u: int, v: int) -> bool:
    full = (1 << n) - 1

    def complete(order: list[int], image: dict[int, int], used: int) -> bool:
        if not order:
            return True
        g = order[0]
        cand = full & ~used
        for h in pat.adj[g]:
            if h in image:
                cand &= adj[image[h]]
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            image[g] = low.bit_length() - 1
            if complete(order[1:], image, used | low):
                return True
            del image[g]
        return False

    for a, b in pat.edges:
        remaining = sorted(
            (g for g in range(pat.n) if g != a and g != b),
            key=lambda g: (-pat.deg[g], g),
        )
        for x, y in ((u, v), (v, u)):
            image = {a: x, b: y}
            if complete(remaining, image, (1 << x) | (1 << y)):
                return True
    return False


def _has_pinned_copy(adj: list[int], n: int, pat: _Pattern, u: int, v: int) -> bool:
    """Does the host graph contain a copy of the pattern using edge (u, v)?"""
    if pat.n > n or not pat.edges:
        return False
    if pat.clique_order:
        return _complete_pinned(adj, pat, u, v)
    return _generic_pinned(adj, n, pat, u, v)


def find_witness(n: int, H: Graph, G: Graph,
                 edge_cap: int = DEFAULT_EDGE_CAP) -> TwoColoring | None:
    """First witness coloring of K_n under the red-before-blue DFS, or None.

    When H = G the color of the first edge is fixed red, exploiting the
    color-swap symmetry of the self-diagonal case.
    """
    if n < 1:
        raise InputError("order must be at least 1")
    pairs = n * (n - 1) // 2
    if pairs > edge_cap:
        raise CapacityError(f"K_{n} has {pairs} edges, above the cap of {edge_cap}")
    # An edgeless pattern that fits in K_n is present in every coloring.
    if H.edge_count == 0 and H.n <= n:
        return None
    if G.edge_count == 0 and G.n <= n:
        return None

    edge_list = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pat_h, pat_g = _Pattern(H), _Pattern(G)
    symmetric = H == G
    red_adj = [0] * n
    blue_adj = [0] * n
    red_pairs: list[tuple[int, int]] = []

    def dfs(i: int) -> TwoColoring | None:
        if i == pairs:
            return TwoColoring(n, frozenset(red_pairs))
        u, v = edge_list[i]
        bu, bv = 1 << u, 1 << v

        red_adj[u] |= bv
        red_adj[v] |= bu
        red_pairs.append((u, v))
        if not _has_pinned_copy(red_adj, n, pat_h, u, v):
            witness = dfs(i + 1)
            if witness is not None:
                return witness
        red_pairs.pop()
        red_adj[u] &= ~bv
        red_adj[v] &= ~bu

        if i == 0 and symmetric:
            return None

        blue_adj[u] |= bv
        blue_adj[v] |= bu
        if not _has_pinned_copy(blue_adj, n, pat_g, u, v):
            witness = dfs(i + 1)
            if witness is not None:
                return witness
        blue_adj[u] &= ~bv
        blue_adj[v] &= ~bu
        return None

    return dfs(0)


def ramsey_number(H: Graph, G: Graph, n_cap: int,
                  edge_cap: int = DEFAULT_EDGE_CAP) -> int | None:
    """Smallest n with no witness coloring, or None if witnesses persist
    through n_cap (the value is then greater than n_cap).

    A witness on K_{n+1} restricts to one on K_n, so the first witness-free
    order is the Ramsey number.
    """
    if n_cap < 1:
        raise InputError("n_cap must be at least 1")
    for n in range(1, n_cap + 1):
        if find_witness(n, H, G, edge_cap) is None:
            return n
    return None
