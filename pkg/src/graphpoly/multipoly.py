"""Sparse multivariate Laurent polynomials and nested coefficient extraction.

A :class:`MultiPoly` maps monomials to integer coefficients. A monomial is a
sorted tuple of ``(VarId, exponent)`` pairs with zero exponents omitted, so
``()`` is the constant monomial. Exponents may be negative.

Partition functions are kept as *factor lists* (plain Python lists of
MultiPoly whose product is the function) and are never expanded in full by
:func:`nested_extraction`: factors are multiplied in one at a time and terms
that can no longer reach the requested coefficient are dropped as soon as
that is known.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .errors import WorkLimitExceeded
from .graph import Graph, incident_edges
from .nilalgebra import edge_indices
from .poly import Poly

DEFAULT_MAX_WORK = 2_000_000


class VarId(NamedTuple):
    """Indeterminate identifier; tuple order gives Z < EDGE(*) < XOR(1, *) < ... < XOR(4, *)."""

    kind: int  # 0 = Z, 1 = EDGE, 2 = XOR
    j: int
    e: int

    def __repr__(self):
        if self.kind == 0:
            return "z"
        if self.kind == 1:
            return f"z[e{self.e}]"
        return f"z{self.j}[e{self.e}]"


Z = VarId(0, 0, 0)


def edge_var(e: int) -> VarId:
    return VarId(1, 0, e)


def xor_var(j: int, e: int) -> VarId:
    if j not in (1, 2, 3, 4):
        raise ValueError("XOR variable family must be 1..4")
    return VarId(2, j, e)


Monomial = Tuple[Tuple[VarId, int], ...]


def _monomial(exps: Mapping[VarId, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return _monomial(d)


class MultiPoly:
    """Sparse polynomial with signed integer coefficients and Laurent exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[tuple(mono)] = int(c)

    @classmethod
    def constant(cls, c: int) -> MultiPoly:
        return cls({(): c})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: int = 1) -> MultiPoly:
        return cls({_monomial(exps): coeff})

    @classmethod
    def var(cls, v: VarId, power: int = 1) -> MultiPoly:
        return cls.monomial({v: power})

    @classmethod
    def _coerce(cls, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot combine MultiPoly with {type(x).__name__}")

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out: Dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = MultiPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> list[VarId]:
        return sorted({v for mono in self.terms for v, _ in mono})

    def min_exponents(self) -> dict[VarId, int]:
        """Smallest exponent of each variable over all terms (absent counts as 0)."""
        lo = {}
        for v in self.variables():
            lo[v] = min(dict(mono).get(v, 0) for mono in self.terms)
        return {v: e for v, e in lo.items() if e}

    def extract_coefficient(self, v: VarId, e: int) -> MultiPoly:
        """``[v**e] self``: the part multiplying ``v**e``, with ``v`` removed."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.pop(v, 0) == e:
                out[_monomial(d)] = c
        return MultiPoly(out)

    def sum_of_coefficients(self) -> int:
        """Value at every variable equal to 1."""
        return sum(self.terms.values())

    def to_poly(self, v: VarId = Z) -> Poly:
        """Convert a polynomial in ``v`` alone to a :class:`Poly`."""
        coeffs: dict[int, int] = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            k = d.pop(v, 0)
            if d:
                raise ValueError(f"term {mono} involves variables other than {v!r}")
            if k < 0:
                raise ValueError(f"negative power of {v!r}")
            coeffs[k] = c
        return Poly(coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(repr(v) if e == 1 else f"{v!r}^{e}" for v, e in mono)
            parts.append(f"{c}*{body}" if body else str(c))
        return "MultiPoly(" + " + ".join(parts) + ")"


def extract_coefficient(p: MultiPoly, v: VarId, e: int) -> MultiPoly:
    return p.extract_coefficient(v, e)


FactorList = List[MultiPoly]


def expand(factors: Iterable[MultiPoly]) -> MultiPoly:
    """Full product of a factor list (1 for an empty list)."""
    out = MultiPoly.constant(1)
    for f in factors:
        out = out * f
    return out


def nested_extraction(
    factors: FactorList,
    targets: Mapping[VarId, int],
    prune: bool = True,
    max_work: Optional[int] = DEFAULT_MAX_WORK,
) -> Poly:
    """Coefficient of ``prod(v**targets[v])`` in the product of ``factors``, as a Poly in Z.

    Factors are multiplied in the given order. With ``prune`` on, after each
    multiplication any term is dropped whose exponent in some variable
    exceeds its target, or whose exponent in a variable no remaining factor
    mentions differs from its target. That is only sound when every non-Z
    exponent in every factor is nonnegative, which is checked. With ``prune``
    off the full product is formed first and the targets are extracted one
    variable at a time, last variable first.

    An unreachable target gives the zero polynomial.
    """
    names = sorted(({v for f in factors for v in f.variables()} | set(targets)) - {Z})
    if Z in targets:
        raise ValueError("Z is the output variable and cannot be a target")
    missing = [v for v in names if v not in targets]
    if missing:
        raise ValueError(f"no target exponent for {missing}")
    slot = {v: i + 1 for i, v in enumerate(names)}
    slot[Z] = 0
    width = len(names) + 1
    goal = [0] + [targets[v] for v in names]

    sparse_factors = []
    last_use = {}
    for i, f in enumerate(factors):
        terms = []
        for mono, c in f.terms.items():
            pairs = tuple((slot[v], e) for v, e in mono)
            if prune and any(e < 0 for s, e in pairs if s):
                raise ValueError(
                    "negative exponent in a factor; shift the factors before pruned extraction"
                )
            terms.append((pairs, c))
        sparse_factors.append(terms)
        for v in f.variables():
            last_use[slot[v]] = i

    exhausted_at: dict[int, list[int]] = {}
    for s, i in last_use.items():
        if s:
            exhausted_at.setdefault(i, []).append(s)

    if prune:
        # a target on a variable no factor mentions must be 0
        for v in names:
            if slot[v] not in last_use and targets[v] != 0:
                return Poly()

    acc: dict[tuple, int] = {tuple([0] * width): 1}
    for i, terms in enumerate(sparse_factors):
        nxt: dict[tuple, int] = {}
        for key, ca in acc.items():
            for pairs, cb in terms:
                if pairs:
                    k = list(key)
                    ok = True
                    for s, e in pairs:
                        k[s] += e
                        if prune and s and k[s] > goal[s]:
                            ok = False
                            break
                    if not ok:
                        continue
                    k = tuple(k)
                else:
                    k = key
                c = nxt.get(k, 0) + ca * cb
                if c:
                    nxt[k] = c
                else:
                    nxt.pop(k, None)
        if prune and i in exhausted_at:
            done = exhausted_at[i]
            nxt = {k: c for k, c in nxt.items() if all(k[s] == goal[s] for s in done)}
        acc = nxt
        if max_work is not None and len(acc) > max_work:
            raise WorkLimitExceeded(
                f"{len(acc)} live terms after factor {i + 1}/{len(factors)} "
                f"exceed the limit of {max_work}"
            )

    for s in range(width - 1, 0, -1):
        acc = {k: c for k, c in acc.items() if k[s] == goal[s]}
    coeffs: dict[int, int] = {}
    for k, c in acc.items():
        if k[0] < 0:
            raise ValueError("negative power of Z in the extracted coefficient")
        coeffs[k[0]] = coeffs.get(k[0], 0) + c
    return Poly(coeffs.get(d, 0) for d in range(max(coeffs, default=-1) + 1))


def build_partition_function(g: Graph) -> FactorList:
    """Factors ``(1 + z * Z_E(v))`` for each vertex, then ``(1 + z_e)`` for each edge."""
    factors = []
    for v in g.vertices:
        exps = {Z: 1}
        exps.update({edge_var(e): 1 for e in edge_indices(incident_edges(g, v))})
        factors.append(MultiPoly.constant(1) + MultiPoly.monomial(exps))
    for e in range(g.m):
        factors.append(MultiPoly.constant(1) + MultiPoly.var(edge_var(e)))
    return factors


def _by_extraction(g, power, max_work, prune):
    targets = {edge_var(e): power for e in range(g.m)}
    try:
        return nested_extraction(build_partition_function(g), targets, prune, max_work)
    except WorkLimitExceeded as exc:
        raise WorkLimitExceeded(
            f"{exc}; use the ESP route for graphs of this size"
        ) from None


def indep_poly_by_extraction(
    g: Graph, max_work: Optional[int] = DEFAULT_MAX_WORK, prune: bool = True
) -> Poly:
    """Independence polynomial as the coefficient of ``prod z_e`` in the partition function."""
    return _by_extraction(g, 1, max_work, prune)


def cover_poly_by_extraction(
    g: Graph, max_work: Optional[int] = DEFAULT_MAX_WORK, prune: bool = True
) -> Poly:
    """Vertex-cover polynomial as the coefficient of ``prod z_e**2``."""
    return _by_extraction(g, 2, max_work, prune)
