"""Brute-force reference counts over all vertex subsets.

Deliberately naive and self-contained: nothing here reuses the subset or
bitmask machinery of the main modules, so a bug there cannot hide here.
"""
from __future__ import annotations

from itertools import combinations, product

from .graph import Graph
from .poly import Poly

MAX_N = 24


def _guard(g: Graph):
    if g.n > MAX_N:
        raise ValueError(f"brute force limited to n <= {MAX_N}, got n={g.n}")


def _adjacency(g: Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges}


def _count_by_size(g: Graph, keep) -> Poly:
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for subset in combinations(range(1, g.n + 1), k):
            if keep(subset):
                counts[k] += 1
    return Poly(counts)


def brute_independence(g: Graph) -> Poly:
    _guard(g)
    adj = _adjacency(g)
    return _count_by_size(
        g, lambda s: not any(frozenset(p) in adj for p in combinations(s, 2))
    )


def brute_clique(g: Graph) -> Poly:
    _guard(g)
    adj = _adjacency(g)
    return _count_by_size(g, lambda s: all(frozenset(p) in adj for p in combinations(s, 2)))


def brute_cover(g: Graph) -> Poly:
    _guard(g)
    return _count_by_size(g, lambda s: all(u in s or v in s for u, v in g.edges))


def brute_cut(g: Graph) -> Poly:
    """Unordered bipartitions by crossing-edge count; vertex 1 always on side 0."""
    _guard(g)
    if g.n < 1:
        raise ValueError("cut polynomial needs at least one vertex")
    counts = [0] * (len(g.edges) + 1)
    for rest in product((0, 1), repeat=g.n - 1):
        side = (0,) + rest
        crossing = sum(1 for u, v in g.edges if side[u - 1] != side[v - 1])
        counts[crossing] += 1
    return Poly(counts)


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """Independent sets not contained in any larger one, by direct subset test."""
    adj = _adjacency(g)
    indep = [
        frozenset(s)
        for k in range(g.n + 1)
        for s in combinations(range(1, g.n + 1), k)
        if not any(frozenset(p) in adj for p in combinations(s, 2))
    ]
    return sorted(
        (tuple(sorted(s)) for s in indep if not any(s < t for t in indep)),
        key=lambda t: (len(t), t),
    )
