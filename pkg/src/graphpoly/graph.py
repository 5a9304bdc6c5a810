"""Simple undirected graphs, text parsers, complement and incidence matrices.

Vertices are labelled ``1..n``. Edges are stored as ``(u, v)`` pairs with
``u < v``, sorted lexicographically; the position of an edge in that list is
its *edge index* and fixes the order of the edge variables everywhere else in
the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = tuple(tuple(e) for e in self.edges)
        index = {}
        prev = None
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not u < v:
                raise ValueError(f"edge {(u, v)} not canonical (need u < v)")
            if not 1 <= u or not v <= self.n:
                raise ValueError(f"edge {(u, v)} outside vertex range 1..{self.n}")
            if prev is not None and not prev < (u, v):
                raise ValueError("edge list must be strictly sorted (no duplicates)")
            prev = (u, v)
            index[(u, v)] = i
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """Build a graph from any iterable of pairs, canonicalizing and deduplicating.

        Loops are rejected. ``n`` defaults to the largest endpoint.
        """
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
        top = max((v for _, v in canon), default=0)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"endpoint {top} exceeds declared vertex count {n}")
        return cls(n, tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(min(u, v), max(u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    @cached_property
    def neighbours(self) -> tuple[frozenset, ...]:
        """``neighbours[v]`` for ``v in 1..n``; slot 0 is an unused empty set."""
        adj = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def to_edge_list(self) -> str:
        """Serialize in the edge-list format read by :func:`parse_edge_list`."""
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def _lines(text: str):
    # splitlines() handles both LF and CRLF
    return enumerate(text.splitlines(), start=1)


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` pairs, one per line.

    ``#`` starts a comment. A line ``n N`` declares the vertex count, which
    allows isolated vertices. Edges are canonicalized to ``u < v`` and
    duplicates are dropped.
    """
    declared = None
    pairs = set()
    for lineno, raw in _lines(text):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if len(toks) != 2:
                raise GraphFormatError("header must be 'n <N>'", lineno)
            declared = _int_token(toks[1], lineno)
            if declared < 0:
                raise GraphFormatError("vertex count must be nonnegative", lineno)
            continue
        if len(toks) != 2:
            raise GraphFormatError(f"expected two vertices, got {len(toks)} tokens", lineno)
        u, v = (_int_token(t, lineno) for t in toks)
        if u < 1 or v < 1:
            raise GraphFormatError("vertex labels must be positive", lineno)
        if u == v:
            raise GraphFormatError(f"loop edge at vertex {u}", lineno)
        pairs.add((min(u, v), max(u, v)))
    top = max((v for _, v in pairs), default=0)
    if declared is not None and top > declared:
        raise GraphFormatError(f"endpoint {top} exceeds declared vertex count {declared}")
    return Graph(declared if declared is not None else top, tuple(sorted(pairs)))


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` text (``c`` lines are comments)."""
    header = None
    pairs = set()
    count = 0
    for lineno, raw in _lines(text):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge <n> <m>'", lineno)
            header = (_int_token(toks[2], lineno), _int_token(toks[3], lineno))
        elif toks[0] == "e":
            if header is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(toks) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            u, v = (_int_token(t, lineno) for t in toks[1:])
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}", lineno)
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise GraphFormatError(f"vertex out of range 1..{header[0]}", lineno)
            pairs.add((min(u, v), max(u, v)))
            count += 1
        else:
            raise GraphFormatError(f"unknown line type {toks[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing problem line")
    if count != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {count}")
    return Graph(header[0], tuple(sorted(pairs)))


def parse_graph(text: str) -> Graph:
    """Dispatch on content: DIMACS if a ``p`` line is present, else edge list."""
    for raw in text.splitlines():
        toks = raw.split()
        if toks and toks[0] == "p":
            return parse_dimacs(text)
    return parse_edge_list(text)


def complement(g: Graph) -> Graph:
    edges = tuple(
        (u, v) for u in g.vertices for v in range(u + 1, g.n + 1) if not g.has_edge(u, v)
    )
    return Graph(g.n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(((i, i % n + 1) for i in range(1, n + 1)), n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(((i, i + 1) for i in range(1, n)), n)


def hypercube_graph(d: int) -> Graph:
    """The ``d``-cube; vertex ``i+1`` is the bit string ``i``."""
    n = 1 << d
    edges = [(i + 1, (i ^ (1 << b)) + 1) for i in range(n) for b in range(d) if not i >> b & 1]
    return Graph.from_edges(edges, n)


def fig1_graph() -> Graph:
    """Six-vertex, seven-edge worked example used throughout the docs and tests."""
    return Graph.from_edges([(1, 2), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5), (5, 6)], 6)


@dataclass(frozen=True)
class IncidencePair:
    C: np.ndarray
    D: np.ndarray


def incidence_matrices(g: Graph) -> IncidencePair:
    """Edge-by-vertex incidence matrix ``C`` and its signed twin ``D``.

    Row ``i`` is edge ``i``; column ``j`` is vertex ``j+1``. ``D`` equals ``C``
    except that the smaller endpoint of each edge carries ``-1``.
    """
    C = np.zeros((g.m, g.n), dtype=np.int64)
    D = np.zeros((g.m, g.n), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        C[i, u - 1] = C[i, v - 1] = 1
        D[i, u - 1] = -1
        D[i, v - 1] = 1
    C.flags.writeable = False
    D.flags.writeable = False
    return IncidencePair(C, D)


def incident_edges(g: Graph, v: int) -> int:
    """Edge indices touching ``v`` as an EdgeSet bitmask (bit ``i`` = edge ``i``)."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    bits = 0
    for w in g.neighbours[v]:
        bits |= 1 << g.edge_index(v, w)
    return bits
