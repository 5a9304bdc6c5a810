"""Squarefree edge-variable monomials under ``z_e**2 == 0``.

A monomial in the edge variables is stored as an ``int`` bitmask (an
*EdgeSet*): bit ``i`` set means ``z_i`` appears to the first power. Python
ints have no width limit, so graphs with any number of edges are handled.
The empty set ``0`` is the monomial ``1``.

A *NilLayer* is a ``dict`` mapping EdgeSet to a positive multiplicity. It is
one degree slice of an elementary symmetric polynomial evaluated in this
algebra; its term count is the sum of the multiplicities.
"""
from __future__ import annotations

from typing import Dict, Iterable, Optional

EdgeSet = int
NilLayer = Dict[int, int]


def edge_set(indices: Iterable[int]) -> EdgeSet:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


def edge_indices(s: EdgeSet) -> list[int]:
    out = []
    i = 0
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def nil_product(a: EdgeSet, b: EdgeSet) -> Optional[EdgeSet]:
    """Product of two squarefree monomials, or None when it vanishes.

    A shared edge variable would appear squared, which is zero.
    """
    if a & b:
        return None
    return a | b


def layer_extend(layer: NilLayer, zv: EdgeSet) -> NilLayer:
    """Multiply every term of ``layer`` by the monomial ``zv``."""
    out: NilLayer = {}
    for s, c in layer.items():
        if s & zv:
            continue
        t = s | zv
        out[t] = out.get(t, 0) + c
    return out


def layer_add(into: NilLayer, other: NilLayer) -> None:
    """In-place ``into += other``."""
    for s, c in other.items():
        into[s] = into.get(s, 0) + c


def term_count(layer: NilLayer) -> int:
    return sum(layer.values())


def product_of(monomials: Iterable[EdgeSet]) -> Optional[EdgeSet]:
    """Product of several monomials, None if any pair overlaps."""
    acc = 0
    for z in monomials:
        if acc & z:
            return None
        acc |= z
    return acc
