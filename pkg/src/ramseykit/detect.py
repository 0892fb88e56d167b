"""Monochromatic structure detection in two-colorings of K_n.

Everything here is a deterministic backtracking search over bitmask
adjacency: clique finding, subgraph-isomorphism copies of a pattern graph,
greedy/exact edge-disjoint clique packing, and degree extrema.  Scan orders
are lexicographic throughout so results are reproducible without seeds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .bitset import iter_bits
from .errors import CapacityError, InputError, SearchBudgetExceeded
from .graphs import Graph, TwoColoring, _normalize_pair

Color = Literal["red", "blue"]

DEFAULT_NODE_BUDGET = 10**8
EXACT_PACKING_MAX_N = 12


def color_adjacency_bits(col: TwoColoring, color: Color) -> list[int]:
    if color == "red":
        return col.red_adjacency_bits()
    if color == "blue":
        return col.blue_adjacency_bits()
    raise InputError(f"color must be 'red' or 'blue', got {color!r}")


@dataclass(frozen=True)
class CliquePacking:
    """Family of pairwise edge-disjoint monochromatic s-cliques."""

    s: int
    members: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def pairs(self) -> set[tuple[int, int]]:
        """All unordered pairs covered by the members."""
        covered: set[tuple[int, int]] = set()
        for member in self.members:
            for i in range(len(member)):
                for j in range(i + 1, len(member)):
                    covered.add(_normalize_pair(member[i], member[j]))
        return covered


@dataclass(frozen=True)
class EmbeddingMap:
    """Injective vertex map witnessing a monochromatic copy of `source`."""

    source: Graph
    assignment: dict[int, int]

    def validates(self, col: TwoColoring, color: Color) -> bool:
        """Revalidate from scratch: injectivity plus per-edge color check."""
        images = list(self.assignment.values())
        if len(self.assignment) != self.source.n or len(set(images)) != len(images):
            return False
        if any(not (0 <= w < col.n) for w in images):
            return False
        want_red = color == "red"
        for u, v in self.source.edges:
            if u not in self.assignment or v not in self.assignment:
                return False
            if col.is_red(self.assignment[u], self.assignment[v]) != want_red:
                return False
        return True


class _NodeCounter:
    __slots__ = ("count", "budget")

    def __init__(self, budget: int | None):
        self.count = 0
        self.budget = budget

    def tick(self):
        self.count += 1
        if self.budget is not None and self.count > self.budget:
            raise SearchBudgetExceeded(f"search exceeded node budget of {self.budget}")


# ---------------------------------------------------------------------------
# Clique search
# ---------------------------------------------------------------------------

def _find_clique_bits(adj: list[int], n: int, start_cand: int, s: int,
                      counter: _NodeCounter) -> tuple[int, ...] | None:
    """Lexicographically least s-clique within the candidate mask, or None."""

    def extend(prefix: list[int], cand: int) -> tuple[int, ...] | None:
        counter.tick()
        if len(prefix) == s:
            return tuple(prefix)
        if len(prefix) + cand.bit_count() < s:
            return None
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prefix.append(v)
            found = extend(prefix, cand & adj[v] & (-1 << (v + 1)))
            prefix.pop()
            if found is not None:
                return found
        return None

    return extend([], start_cand)


def find_clique(col: TwoColoring, color: Color, s: int,
                node_budget: int | None = None) -> tuple[int, ...] | None:
    """First s-set (in lexicographic backtracking order) monochromatic in `color`.

    Returns None when no such clique exists; raises SearchBudgetExceeded when
    a node budget is given and runs out before the search decides.
    """
    if s < 1:
        raise InputError("clique order must be at least 1")
    if s > col.n:
        return None
    adj = color_adjacency_bits(col, color)
    return _find_clique_bits(adj, col.n, (1 << col.n) - 1, s, _NodeCounter(node_budget))


# ---------------------------------------------------------------------------
# Subgraph-isomorphism copies (not induced)
# ---------------------------------------------------------------------------

def find_copy(col: TwoColoring, color: Color, G: Graph,
              node_budget: int | None = DEFAULT_NODE_BUDGET) -> EmbeddingMap | None:
    """First monochromatic copy of G, as an injective vertex map, or None.

    Backtracking places pattern vertices in decreasing-degree order; a host
    candidate must have monochromatic degree at least the pattern degree and
    be adjacent (in the color) to every already-placed pattern neighbor.
    Absence is exact unless the node budget runs out, which raises
    SearchBudgetExceeded instead of returning None.
    """
    n, vg = col.n, G.n
    if vg > n:
        return None
    if vg == 0:
        return EmbeddingMap(G, {})
    adj = color_adjacency_bits(col, color)
    host_deg = [a.bit_count() for a in adj]
    gdeg = G.degrees()
    gadj = G.adjacency_sets()
    order = sorted(range(vg), key=lambda g: (-gdeg[g], g))
    pos = {g: i for i, g in enumerate(order)}
    placed_nbrs = [[pos[h] for h in gadj[g] if pos[h] < i] for i, g in enumerate(order)]
    deg_mask = [0] * vg
    full = (1 << n) - 1
    for i, g in enumerate(order):
        mask = 0
        for w in range(n):
            if host_deg[w] >= gdeg[g]:
                mask |= 1 << w
        deg_mask[i] = mask

    counter = _NodeCounter(node_budget)
    image = [0] * vg

    def place(i: int, used: int) -> bool:
        counter.tick()
        if i == vg:
            return True
        cand = deg_mask[i] & ~used
        for j in placed_nbrs[i]:
            cand &= adj[image[j]]
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            image[i] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
        return False

    if place(0, 0):
        return EmbeddingMap(G, {order[i]: image[i] for i in range(vg)})
    return None


# ---------------------------------------------------------------------------
# Edge-disjoint red clique packing
# ---------------------------------------------------------------------------

def _greedy_packing(adj: list[int], n: int, s: int) -> list[tuple[int, ...]]:
    """Maximal edge-disjoint packing, scanning s-cliques in lexicographic order.

    `used[v]` is the bitmask of vertices w such that the pair {v, w} is
    already covered by an accepted member; acceptance rechecks every internal
    pair so members accepted earlier on the same DFS path cannot be reused.
    """
    used = [0] * n
    members: list[tuple[int, ...]] = []

    def disjoint_from_used(stack: list[int]) -> bool:
        for i in range(len(stack)):
            for j in range(i + 1, len(stack)):
                if (used[stack[i]] >> stack[j]) & 1:
                    return False
        return True

    def grow(stack: list[int], cand: int):
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if any((used[u] >> v) & 1 for u in stack):
                continue
            stack.append(v)
            if len(stack) == s:
                if disjoint_from_used(stack):
                    member = tuple(stack)
                    members.append(member)
                    for i in range(s):
                        for j in range(i + 1, s):
                            used[member[i]] |= 1 << member[j]
                            used[member[j]] |= 1 << member[i]
            else:
                grow(stack, cand & adj[v] & (-1 << (v + 1)))
            stack.pop()

    grow([], (1 << n) - 1)
    return members


def _all_cliques(adj: list[int], n: int, s: int) -> list[tuple[int, ...]]:
    """Every s-clique, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(stack: list[int], cand: int):
        if len(stack) == s:
            out.append(tuple(stack))
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            stack.append(v)
            grow(stack, cand & adj[v] & (-1 << (v + 1)))
            stack.pop()

    grow([], (1 << n) - 1)
    return out


def _exact_packing(adj: list[int], n: int, s: int) -> list[tuple[int, ...]]:
    """Maximum-cardinality edge-disjoint packing by branch and bound."""
    cliques = _all_cliques(adj, n, s)
    if not cliques:
        return []
    pair_bit = {}
    for u in range(n):
        for v in iter_bits(adj[u] & (-1 << (u + 1))):
            pair_bit[(u, v)] = len(pair_bit)
    all_pairs_mask = (1 << len(pair_bit)) - 1
    per_clique = math.comb(s, 2)
    masks = []
    for member in cliques:
        mask = 0
        for i in range(s):
            for j in range(i + 1, s):
                mask |= 1 << pair_bit[(member[i], member[j])]
        masks.append(mask)

    best: list[tuple[int, ...]] = []

    def rec(i: int, used: int, chosen: list[tuple[int, ...]]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(cliques):
            return
        free = (all_pairs_mask & ~used).bit_count() // per_clique
        if len(chosen) + min(len(cliques) - i, free) <= len(best):
            return
        if not (masks[i] & used):
            chosen.append(cliques[i])
            rec(i + 1, used | masks[i], chosen)
            chosen.pop()
        rec(i + 1, used, chosen)

    rec(0, 0, [])
    return best


def max_edge_disjoint_packing(col: TwoColoring, s: int,
                              mode: Literal["greedy", "exact"] = "greedy") -> CliquePacking:
    """Edge-disjoint packing of red s-cliques.

    Greedy mode returns a maximal packing (no red s-clique is edge-disjoint
    from all members), which is what the recoloring step needs; exact mode
    returns a maximum-cardinality packing and is capped at n <= 12 because
    maximum packing is a hard search problem.
    """
    if s < 2:
        raise InputError("clique order must be at least 2")
    if mode not in ("greedy", "exact"):
        raise InputError(f"mode must be 'greedy' or 'exact', got {mode!r}")
    if mode == "exact" and col.n > EXACT_PACKING_MAX_N:
        raise CapacityError(f"exact packing capped at n <= {EXACT_PACKING_MAX_N}")
    adj = col.red_adjacency_bits()
    if mode == "greedy":
        members = _greedy_packing(adj, col.n, s)
    else:
        members = _exact_packing(adj, col.n, s)
    return CliquePacking(s=s, members=tuple(members))


def max_red_degree_vertex(col: TwoColoring) -> tuple[int, int]:
    """Vertex with maximum red degree, ties broken by smallest id."""
    if col.n < 1:
        raise InputError("coloring must have at least one vertex")
    adj = col.red_adjacency_bits()
    best_v, best_d = 0, adj[0].bit_count()
    for v in range(1, col.n):
        d = adj[v].bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d
