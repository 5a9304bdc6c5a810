"""Bipartite-cut polynomial.

``D_k`` counts unordered vertex bipartitions ``{S, V \\ S}`` with exactly
``k`` edges crossing between the parts. Two routes are provided:

* :func:`cut_polynomial_laurent` extracts the coefficient from the partition
  function of the linearized XOR system, whose vertex factors are Laurent
  monomials in ``4m`` variables;
* :func:`cut_polynomial_xor` enumerates the ``2**(n-1)`` bipartitions with
  vertex 1 pinned to side 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .errors import VerificationError, WorkLimitExceeded
from .graph import Graph, incidence_matrices
from .multipoly import (
    DEFAULT_MAX_WORK,
    FactorList,
    MultiPoly,
    VarId,
    Z,
    nested_extraction,
    xor_var,
)
from .poly import Poly

# x_u + x_v - x_uv + 2s = 2, -x_u + x_v + x_uv + 2t = 2,
# x_u - x_v + x_uv + 2y = 2,  x_u + x_v + x_uv + 2w = 2
_SLACK_ROWS = (
    (1, 1, -1, 2, 0, 0, 0),
    (-1, 1, 1, 0, 2, 0, 0),
    (1, -1, 1, 0, 0, 2, 0),
    (1, 1, 1, 0, 0, 0, 2),
)


def xor_truth_table_check() -> list[tuple[int, ...]]:
    """Binary 7-tuples ``(x_u, x_v, x_uv, s, t, y, w)`` solving the four slack equations."""
    return [
        x
        for x in product((0, 1), repeat=7)
        if all(sum(a * b for a, b in zip(row, x)) == 2 for row in _SLACK_ROWS)
    ]


@dataclass(frozen=True)
class CutSystem:
    """``A x = b`` over variables ``(x_V, x_E, s_E, t_E, y_E, w_E)``."""

    A: np.ndarray
    b: np.ndarray
    n: int
    m: int

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return bool(np.array_equal(self.A @ np.asarray(x, dtype=np.int64), self.b))


def build_cut_system(g: Graph, k: int) -> CutSystem:
    n, m = g.n, g.m
    inc = incidence_matrices(g)
    eye = np.eye(m, dtype=np.int64)
    zero = np.zeros((m, m), dtype=np.int64)
    top = np.concatenate([np.zeros(n, dtype=np.int64), np.ones(m, dtype=np.int64),
                          np.zeros(4 * m, dtype=np.int64)])[None, :]
    blocks = [
        [inc.C, -eye, 2 * eye, zero, zero, zero],
        [inc.D, eye, zero, 2 * eye, zero, zero],
        [-inc.D, eye, zero, zero, 2 * eye, zero],
        [inc.C, eye, zero, zero, zero, 2 * eye],
    ]
    A = np.vstack([top] + [np.hstack(row) for row in blocks])
    b = np.array([k] + [2] * (4 * m), dtype=np.int64)
    return CutSystem(A, b, n, m)


def bipartition_assignment(g: Graph, sides: Sequence[int]) -> tuple[np.ndarray, int]:
    """Full binary solution vector for the vertex sides ``sides[v - 1]``, and its cut size."""
    x_v = np.asarray(sides, dtype=np.int64)
    rows = []
    for u, v in g.edges:
        rows.append(_edge_solution(int(x_v[u - 1]), int(x_v[v - 1])))
    per_edge = np.array(rows, dtype=np.int64).reshape(g.m, 5)
    x = np.concatenate([x_v] + [per_edge[:, i] for i in range(5)])
    return x, int(per_edge[:, 0].sum())


def _edge_solution(xu, xv):
    xuv = xu ^ xv
    s = (2 - xu - xv + xuv) // 2
    t = (2 + xu - xv - xuv) // 2
    y = (2 - xu + xv - xuv) // 2
    w = (2 - xu - xv - xuv) // 2
    return xuv, s, t, y, w


def laurent_vertex_monomials(g: Graph) -> list[dict[VarId, int]]:
    """Exponents of each vertex's Laurent monomial over the ``4m`` XOR variables.

    The exponent of ``XOR(j, e)`` for vertex ``v`` is entry ``(e, v)`` of
    ``C``, ``D``, ``-D`` and ``C`` for ``j = 1, 2, 3, 4``.
    """
    inc = incidence_matrices(g)
    stacked = np.vstack([inc.C, inc.D, -inc.D, inc.C])
    out = []
    for col in stacked.T:
        out.append({xor_var(r // g.m + 1, r % g.m): int(c) for r, c in enumerate(col) if c})
    return out


def cut_partition_factors(g: Graph) -> FactorList:
    """Edge factors, then slack factors (edge-major, j = 1..4), then vertex factors."""
    one = MultiPoly.constant(1)
    factors = []
    for e in range(g.m):
        exps = {Z: 1, xor_var(1, e): -1, xor_var(2, e): 1, xor_var(3, e): 1, xor_var(4, e): 1}
        factors.append(one + MultiPoly.monomial(exps))
    for e in range(g.m):
        for j in range(1, 5):
            factors.append(one + MultiPoly.var(xor_var(j, e), 2))
    for exps in laurent_vertex_monomials(g):
        factors.append(one + MultiPoly.monomial(exps))
    return factors


def _shift_nonnegative(factors: FactorList) -> tuple[FactorList, dict[VarId, int]]:
    """Multiply each factor by the least monomial clearing its negative exponents.

    Returns the shifted factors and the combined shift monomial.
    """
    shifted = []
    total: dict[VarId, int] = {}
    for f in factors:
        lo = f.min_exponents()
        if lo:
            f = f * MultiPoly.monomial({v: -e for v, e in lo.items()})
            for v, e in lo.items():
                total[v] = total.get(v, 0) - e
        shifted.append(f)
    return shifted, total


def _sweep_order(g: Graph) -> list[int]:
    """Factor order that closes off each edge's variables as early as possible.

    Vertices are added in order; right after vertex ``v``, every edge whose
    larger endpoint is ``v`` contributes its edge factor and slack factors.
    """
    m = g.m
    order = []
    for v in g.vertices:
        order.append(5 * m + v - 1)
        for e, (_, hi) in enumerate(g.edges):
            if hi == v:
                order.append(e)
                order.extend(m + 4 * e + j for j in range(4))
    return order


def cut_polynomial_laurent(
    g: Graph, max_work: Optional[int] = DEFAULT_MAX_WORK, shift: bool = True
) -> Poly:
    """Cut polynomial by coefficient extraction from the XOR partition function.

    With ``shift`` (the default), factors are first multiplied by
    ``phi = prod_e z1 z2 z3`` so every exponent is nonnegative and pruned
    extraction of ``prod_e z1^3 z2^3 z3^3 z4^2`` applies. With ``shift``
    off, the unshifted coefficient ``prod_e z1^2 z2^2 z3^2 z4^2`` is taken
    from the fully expanded product; only feasible for tiny graphs.

    The raw coefficient counts both orientations of each bipartition and is
    halved.
    """
    if g.n < 1:
        raise ValueError("cut polynomial needs at least one vertex")
    factors = cut_partition_factors(g)
    targets = {xor_var(j, e): 2 for e in range(g.m) for j in range(1, 5)}
    try:
        if shift:
            shifted, phi = _shift_nonnegative(factors)
            expected = {xor_var(j, e): 1 for e in range(g.m) for j in (1, 2, 3)}
            if phi != expected:
                raise VerificationError(f"shift monomial {phi} is not prod z1 z2 z3")
            for v, e in phi.items():
                targets[v] += e
            ordered = [shifted[i] for i in _sweep_order(g)]
            raw = nested_extraction(ordered, targets, prune=True, max_work=max_work)
        else:
            raw = nested_extraction(factors, targets, prune=False, max_work=max_work)
    except WorkLimitExceeded as exc:
        raise WorkLimitExceeded(f"{exc}; use the XOR route for graphs of this size") from None
    if any(c % 2 for c in raw):
        raise VerificationError(f"raw cut count {raw} is not symmetric under side swap")
    return Poly(c // 2 for c in raw)


def cut_polynomial_xor(g: Graph, max_n: int = 30, chunk_bits: int = 20) -> Poly:
    """Cut polynomial by enumerating vertex 2-colourings with vertex 1 fixed to side 0."""
    if g.n < 1:
        raise ValueError("cut polynomial needs at least one vertex")
    if g.n > max_n:
        raise WorkLimitExceeded(f"n={g.n} exceeds the enumeration limit {max_n}")
    free = g.n - 1
    counts = [0] * (g.m + 1)
    if g.m == 0:
        counts[0] = 1 << free
        return Poly(counts)
    us = np.array([u for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v in g.edges], dtype=np.int64)
    step = 1 << min(free, chunk_bits)
    for start in range(0, 1 << free, step):
        masks = np.arange(start, start + step, dtype=np.int64)[:, None]
        # vertex w >= 2 sits on side bit (w - 2) of the mask; vertex 1 is side 0
        side_u = np.where(us >= 2, (masks >> np.maximum(us - 2, 0)) & 1, 0)
        side_v = (masks >> (vs - 2)) & 1
        sizes = (side_u ^ side_v).sum(axis=1)
        for k, c in enumerate(np.bincount(sizes, minlength=g.m + 1)):
            counts[k] += int(c)
    return Poly(counts)


def expected_random_cut(p: Poly) -> Fraction:
    """Mean cut size ``p'(1) / p(1)`` under uniform random bipartition."""
    if p.is_zero():
        raise ValueError("zero polynomial has no distribution")
    return p.mean_exponent()
