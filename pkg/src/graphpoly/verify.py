"""Randomized cross-checks of every route against the oracles and known identities."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Dict, Optional

from . import cut, derived, indep, multipoly, oracle
from .errors import VerificationError, WorkLimitExceeded
from .graph import Graph

#: computations a caller may replace (fault injection, alternative backends)
DEFAULT_ROUTES: Dict[str, Callable] = {
    "indep": indep.independence_polynomial,
    "clique": derived.clique_polynomial,
    "cover": derived.vertex_cover_polynomial,
    "cut": cut.cut_polynomial_xor,
    "indep_extraction": multipoly.indep_poly_by_extraction,
    "cover_extraction": multipoly.cover_poly_by_extraction,
    "cut_laurent": cut.cut_polynomial_laurent,
}

PROPERTIES = (
    "indep_vs_oracle",
    "clique_vs_oracle",
    "cover_vs_oracle",
    "cut_vs_oracle",
    "indep_extraction_vs_esp",
    "cover_extraction_vs_reversal",
    "cut_laurent_vs_xor",
    "low_coefficients",
    "cover_reversal",
    "gallai",
    "cut_total",
    "expected_cut",
    "nilpotency_index",
    "enumeration_counts",
    "cover_complements",
)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph(n, tuple(edges))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {1}
    stack = [1]
    while stack:
        for w in g.neighbours[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Rejection-sample ``G(n, p)`` until connected; p is raised if it keeps failing."""
    tries = 0
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
        tries += 1
        if tries % 50 == 0:
            p = min(1.0, p + 0.1)


def random_graphs(seed: int, count: int, n_max: int, p: float = 0.3) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, n_max), p) for _ in range(count)]


@dataclass
class VerifyReport:
    passed: Dict[str, int] = field(default_factory=lambda: {p: 0 for p in PROPERTIES})
    failed: Dict[str, int] = field(default_factory=lambda: {p: 0 for p in PROPERTIES})
    skipped: Dict[str, int] = field(default_factory=lambda: {p: 0 for p in PROPERTIES})
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_graph(g: Graph, routes: Optional[Dict[str, Callable]] = None,
                exhaustive_n: int = 10) -> Dict[str, Optional[str]]:
    """Run every property on ``g``. Value is None on pass, ``"skip"``, or a failure message."""
    r = dict(DEFAULT_ROUTES)
    if routes:
        r.update(routes)
    n, m = g.n, g.m
    out: Dict[str, Optional[str]] = {}

    def expect(name, got, want):
        out[name] = None if got == want else f"got {got}, expected {want}"

    pa = r["indep"](g)
    pg = r["clique"](g)
    pb = r["cover"](g)
    pw = r["cut"](g)
    expect("indep_vs_oracle", pa, oracle.brute_independence(g))
    expect("clique_vs_oracle", pg, oracle.brute_clique(g))
    expect("cover_vs_oracle", pb, oracle.brute_cover(g))
    expect("cut_vs_oracle", pw, oracle.brute_cut(g))

    for name, key, want in (
        ("indep_extraction_vs_esp", "indep_extraction", pa),
        ("cover_extraction_vs_reversal", "cover_extraction", pb),
        ("cut_laurent_vs_xor", "cut_laurent", pw),
    ):
        try:
            expect(name, r[key](g), want)
        except WorkLimitExceeded:
            out[name] = "skip"

    expect("low_coefficients", (pa[0], pa[1], pa[2]), (1, n, comb(n, 2) - m))
    expect("cover_reversal", [pb[k] for k in range(n + 1)], [pa[n - k] for k in range(n + 1)])
    expect("gallai", pa.degree + pb.low_degree, n)
    expect("cut_total", pw(1), 2 ** (n - 1))
    expect("expected_cut", cut.expected_random_cut(pw), Fraction(m, 2))

    # witness check always; the all-(alpha+1)-products sweep only up to exhaustive_n
    limit = comb(n, n // 2) + 1 if n <= exhaustive_n else 0
    try:
        expect("nilpotency_index", indep.nilpotency_index(g, exhaustive_limit=limit),
               pa.degree + 1)
    except VerificationError as exc:
        out["nilpotency_index"] = str(exc)

    sets_by_k = [indep.enumerate_independent_sets(g, k) for k in range(n + 1)]
    expect("enumeration_counts", [len(s) for s in sets_by_k], pa.padded(n + 1))

    verts = set(g.vertices)
    bad = [
        s for sets in sets_by_k for s in sets
        if not all(u in verts - set(s) or v in verts - set(s) for u, v in g.edges)
    ]
    out["cover_complements"] = f"complement of {bad[0]} is not a cover" if bad else None
    return out


def verify(seed: int, count: int, n_max: int, p: float = 0.3,
           routes: Optional[Dict[str, Callable]] = None) -> VerifyReport:
    report = VerifyReport()
    for g in random_graphs(seed, count, n_max, p):
        for name, result in check_graph(g, routes).items():
            if result is None:
                report.passed[name] += 1
            elif result == "skip":
                report.skipped[name] += 1
            else:
                report.failed[name] += 1
                report.failures.append(
                    {"property": name, "detail": result, "graph": g.to_edge_list()}
                )
    return report
