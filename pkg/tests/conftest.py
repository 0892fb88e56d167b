"""Shared helpers: independent brute-force oracles and seeded instance
generators.  The oracles deliberately avoid the package's search kernels so
that agreement is a real cross-check.
"""
from __future__ import annotations

import itertools
import random

from ramseykit.graphs import Graph, TwoColoring, graph_from_edges, coloring_from_red


def all_colorings(n: int):
    """Every red/blue coloring of K_n (2^C(n,2) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        red = frozenset(p for i, p in enumerate(pairs) if (bits >> i) & 1)
        yield TwoColoring(n, red)


def naive_has_clique(col: TwoColoring, color: str, s: int) -> bool:
    want_red = color == "red"
    for combo in itertools.combinations(range(col.n), s):
        if all(
            col.is_red(u, v) == want_red
            for u, v in itertools.combinations(combo, 2)
        ):
            return True
    return False


def naive_find_copy(col: TwoColoring, color: str, G: Graph):
    """Exhaustive injective-map search; returns a dict or None."""
    want_red = color == "red"
    for perm in itertools.permutations(range(col.n), G.n):
        if all(col.is_red(perm[u], perm[v]) == want_red for u, v in G.edges):
            return dict(enumerate(perm))
    return None


def naive_max_packing_size(col: TwoColoring, s: int) -> int:
    """Maximum edge-disjoint family of red s-cliques by plain recursion over
    include/exclude choices; only usable when the clique count is small."""
    cliques = []
    for combo in itertools.combinations(range(col.n), s):
        if all(col.is_red(u, v) for u, v in itertools.combinations(combo, 2)):
            cliques.append(frozenset(
                frozenset(p) for p in itertools.combinations(combo, 2)
            ))

    def best_from(i: int, used: frozenset) -> int:
        if i == len(cliques):
            return 0
        score = best_from(i + 1, used)
        if not (cliques[i] & used):
            score = max(score, 1 + best_from(i + 1, used | cliques[i]))
        return score

    return best_from(0, frozenset())


def random_connected_graph(rng: random.Random, m: int) -> Graph:
    """Connected graph with exactly m edges and no isolated vertices."""
    v_min = 2
    while v_min * (v_min - 1) // 2 < m:
        v_min += 1
    v = rng.randint(v_min, m + 1)
    edges = set()
    for w in range(1, v):
        edges.add((rng.randrange(w), w))
    candidates = [
        (a, b) for a in range(v) for b in range(a + 1, v) if (a, b) not in edges
    ]
    rng.shuffle(candidates)
    for pair in candidates[: m - (v - 1)]:
        edges.add(pair)
    return graph_from_edges(v, edges)


def random_bipartite_red_coloring(rng: random.Random, n: int, q: float) -> TwoColoring:
    """Triangle-free red graph: random bipartition, cross pairs red w.p. q."""
    side = [rng.random() < 0.5 for _ in range(n)]
    red = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if side[u] != side[v] and rng.random() < q
    ]
    return coloring_from_red(n, red)


# Every isolated-vertex-free graph with at most 3 edges, up to isomorphism.
GRAPHS_UP_TO_3_EDGES = {
    "K2": graph_from_edges(2, [(0, 1)]),
    "P3": graph_from_edges(3, [(0, 1), (1, 2)]),
    "2K2": graph_from_edges(4, [(0, 1), (2, 3)]),
    "K3": graph_from_edges(3, [(0, 1), (0, 2), (1, 2)]),
    "P4": graph_from_edges(4, [(0, 1), (1, 2), (2, 3)]),
    "K13": graph_from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "P3+K2": graph_from_edges(5, [(0, 1), (1, 2), (3, 4)]),
    "3K2": graph_from_edges(6, [(0, 1), (2, 3), (4, 5)]),
}
