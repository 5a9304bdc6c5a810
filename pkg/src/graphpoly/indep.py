"""Independence polynomial from the nilpotent ESP recursion.

Each vertex ``v`` contributes its vertex monomial (the product of the edge
variables incident to ``v``). The elementary symmetric polynomials of these
monomials are built with the usual one-vertex-at-a-time table recursion,
reducing with ``z_e**2 == 0`` after every step. The number of surviving terms
in degree ``k`` is the number of independent sets of order ``k``.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import List, Optional

from .errors import VerificationError, WorkLimitExceeded
from .graph import Graph, incident_edges
from .nilalgebra import NilLayer, layer_add, layer_extend, product_of, term_count
from .poly import Poly

EspState = List[NilLayer]


def vertex_monomials(g: Graph) -> list[int]:
    """EdgeSet of each vertex, in vertex order (index 0 is vertex 1)."""
    return [incident_edges(g, v) for v in g.vertices]


def _check_work(layers, max_work):
    if max_work is not None:
        live = sum(len(layer) for layer in layers)
        if live > max_work:
            raise WorkLimitExceeded(
                f"{live} live terms exceed the limit of {max_work}"
            )


def esp_nil_recursion(g: Graph, max_work: Optional[int] = None) -> EspState:
    """Run the ESP table recursion over the vertex monomials of ``g``.

    Returns ``layers`` where ``layers[l]`` is the degree-``l`` ESP as a
    NilLayer. Degrees that vanish identically are not included, so
    ``len(layers) == alpha(g) + 1``.
    """
    layers: EspState = [{0: 1}]
    for zv in vertex_monomials(g):
        # descending degree so layers[ell - 1] still holds the previous column
        for ell in range(len(layers), 0, -1):
            ext = layer_extend(layers[ell - 1], zv)
            if not ext:
                continue
            if ell == len(layers):
                layers.append(ext)
            else:
                layer_add(layers[ell], ext)
        _check_work(layers, max_work)
    return layers


def independence_polynomial(g: Graph, max_work: Optional[int] = None) -> Poly:
    return Poly(term_count(layer) for layer in esp_nil_recursion(g, max_work))


def independence_number(g: Graph) -> int:
    return independence_polynomial(g).degree


def enumerate_independent_sets(
    g: Graph, k: int, max_work: Optional[int] = None
) -> list[tuple[int, ...]]:
    """All independent sets of order ``k``, sorted lexicographically.

    Same recursion as :func:`esp_nil_recursion`, but every term carries the
    vertex subsets that produced it instead of a bare multiplicity. Layers
    above ``k`` are never built.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} outside 0..{g.n}")
    layers: list[dict[int, list[tuple[int, ...]]]] = [{0: [()]}] + [{} for _ in range(k)]
    for v, zv in zip(g.vertices, vertex_monomials(g)):
        for ell in range(k, 0, -1):
            below = layers[ell - 1]
            if not below:
                continue
            here = layers[ell]
            for s, subsets in below.items():
                if s & zv:
                    continue
                here.setdefault(s | zv, []).extend(t + (v,) for t in subsets)
        if max_work is not None:
            live = sum(len(ts) for layer in layers for ts in layer.values())
            if live > max_work:
                raise WorkLimitExceeded(f"{live} live subsets exceed the limit of {max_work}")
    return sorted(t for ts in layers[k].values() for t in ts)


def nilpotency_index(g: Graph, exhaustive_limit: int = 100_000) -> int:
    """Smallest ``k`` such that every product of ``k`` distinct vertex monomials is zero.

    Computed as ``1 + alpha``. As a check, the product over one maximum
    independent set must be nonzero, and when there are at most
    ``exhaustive_limit`` vertex subsets of order ``alpha + 1``, every one of
    their products must vanish.
    """
    alpha = independence_number(g)
    mons = vertex_monomials(g)
    witness = enumerate_independent_sets(g, alpha)[0]
    if product_of(mons[v - 1] for v in witness) is None:
        raise VerificationError(f"maximum independent set {witness} has a zero product")
    if comb(g.n, alpha + 1) <= exhaustive_limit:
        for combo in combinations(mons, alpha + 1):
            if product_of(combo) is not None:
                raise VerificationError(f"nonzero product of {alpha + 1} vertex monomials")
    return alpha + 1


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """Independent sets contained in no larger independent set, ordered by size.

    Built from the per-order enumerations: a set of order ``k`` is maximal
    iff no set of order ``k + 1`` contains it.
    """
    alpha = independence_number(g)
    by_order = [enumerate_independent_sets(g, k) for k in range(alpha + 1)]
    out = []
    for k, sets in enumerate(by_order):
        bigger = [set(t) for t in by_order[k + 1]] if k < alpha else []
        out.extend(s for s in sets if not any(set(s) <= b for b in bigger))
    return out
