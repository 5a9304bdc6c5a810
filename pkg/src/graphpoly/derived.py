"""Clique and vertex-cover polynomials, both obtained from independent sets."""
from __future__ import annotations

from typing import Optional

from .graph import Graph, complement
from .indep import independence_polynomial
from .poly import Poly


def clique_polynomial(g: Graph, max_work: Optional[int] = None) -> Poly:
    # cliques of g are exactly the independent sets of its complement
    return independence_polynomial(complement(g), max_work)


def clique_number(g: Graph) -> int:
    return clique_polynomial(g).degree


def vertex_cover_polynomial(g: Graph, max_work: Optional[int] = None) -> Poly:
    """``B_k = A_{n-k}``: a set covers every edge iff its complement is independent."""
    return independence_polynomial(g, max_work).reversed_in(g.n)


def covering_number(g: Graph) -> int:
    return vertex_cover_polynomial(g).low_degree
