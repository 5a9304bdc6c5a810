from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from graphpoly.cut import (
    bipartition_assignment,
    build_cut_system,
    cut_partition_factors,
    cut_polynomial_laurent,
    cut_polynomial_xor,
    expected_random_cut,
    laurent_vertex_monomials,
    xor_truth_table_check,
)
from graphpoly.errors import WorkLimitExceeded
from graphpoly.graph import Graph, complete_graph, cycle_graph, empty_graph, hypercube_graph, path_graph
from graphpoly.multipoly import MultiPoly, expand, xor_var
from graphpoly.oracle import brute_cut
from graphpoly.poly import Poly

from conftest import graphs

FIG1_CUT = [1, 1, 4, 10, 9, 5, 2]


def test_truth_table():
    sols = xor_truth_table_check()
    assert len(sols) == 4
    assert (0, 0, 0, 1, 1, 1, 1) in sols
    assert (1, 0, 1, 1, 1, 0, 0) in sols
    assert set(sols) == {
        (0, 0, 0, 1, 1, 1, 1),
        (0, 1, 1, 1, 0, 1, 0),
        (1, 0, 1, 1, 1, 0, 0),
        (1, 1, 0, 0, 1, 1, 0),
    }
    assert {s[:3] for s in sols} == {(a, b, a ^ b) for a in (0, 1) for b in (0, 1)}


def test_cut_system_shapes(fig1):
    assert build_cut_system(fig1, 0).A.shape == (29, 41)
    assert build_cut_system(complete_graph(2), 0).A.shape == (5, 7)


def test_cut_system_k2_listed_solution():
    sys_ = build_cut_system(complete_graph(2), 1)
    # x = (0, 1), x12 = 1, slacks (s, t, y, w) = (1, 0, 1, 0)
    assert sys_.satisfied_by([0, 1, 1, 1, 0, 1, 0])
    assert not sys_.satisfied_by([0, 1, 1, 1, 0, 1, 1])
    assert not build_cut_system(complete_graph(2), 0).satisfied_by([0, 1, 1, 1, 0, 1, 0])


def test_cut_system_blocks(fig1):
    A = build_cut_system(fig1, 3).A
    n, m = 6, 7
    assert list(A[0]) == [0] * n + [1] * m + [0] * (4 * m)
    for blk, slack in enumerate(range(4)):
        rows = A[1 + blk * m: 1 + (blk + 1) * m]
        np.testing.assert_array_equal(rows[:, n + m + slack * m: n + m + (slack + 1) * m], 2 * np.eye(m))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_every_bipartition_solves_system(g):
    for sides in product((0, 1), repeat=g.n):
        x, k = bipartition_assignment(g, sides)
        system = build_cut_system(g, k)
        assert system.satisfied_by(x)
        assert set(np.unique(x)) <= {0, 1}


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=4))
def test_system_solutions_project_to_truth_table(g):
    # every binary solution, restricted to one edge, is a row of the XOR table
    if g.m == 0 or g.n + 5 * g.m > 16:
        return
    table = set(xor_truth_table_check())
    for k in range(g.m + 1):
        system = build_cut_system(g, k)
        for x in product((0, 1), repeat=g.n + 5 * g.m):
            if not system.satisfied_by(x):
                continue
            for e, (u, v) in enumerate(g.edges):
                m = g.m
                row = (x[u - 1], x[v - 1]) + tuple(x[g.n + j * m + e] for j in range(5))
                assert row in table


def test_laurent_monomials_fig1(fig1):
    mons = laurent_vertex_monomials(fig1)
    e = {pair: i for i, pair in enumerate(fig1.edges)}
    v1 = {}
    for j, sign in ((1, 1), (2, -1), (3, 1), (4, 1)):
        for pair in ((1, 2), (1, 6)):
            v1[xor_var(j, e[pair])] = sign
    assert mons[0] == v1
    v6 = {}
    for j, sign in ((1, 1), (2, 1), (3, -1), (4, 1)):
        for pair in ((1, 6), (2, 6), (5, 6)):
            v6[xor_var(j, e[pair])] = sign
    assert mons[5] == v6


def test_laurent_monomials_k2():
    mons = laurent_vertex_monomials(complete_graph(2))
    assert [mons[0][xor_var(j, 0)] for j in range(1, 5)] == [1, -1, 1, 1]
    assert [mons[1][xor_var(j, 0)] for j in range(1, 5)] == [1, 1, -1, 1]


def test_partition_factors(fig1):
    assert len(cut_partition_factors(fig1)) == 41
    factors = cut_partition_factors(complete_graph(2))
    assert len(factors) == 7
    assert expand(factors).sum_of_coefficients() == 2 ** 7
    one = MultiPoly.constant(1)
    assert factors[1] == one + MultiPoly.var(xor_var(1, 0), 2)


def test_partition_factor_mass(fig1):
    factors = cut_partition_factors(fig1)
    mass = 1
    for f in factors:
        mass *= f.sum_of_coefficients()
    assert mass == 2 ** 7 * 2 ** 28 * 2 ** 6


@pytest.mark.parametrize("route", [cut_polynomial_laurent, cut_polynomial_xor, brute_cut])
def test_cut_examples(route, fig1):
    assert route(fig1) == FIG1_CUT
    assert route(complete_graph(3)) == [1, 0, 3]
    assert route(complete_graph(2)) == [1, 1]
    assert route(empty_graph(3)) == [4]


def test_k3_has_no_full_cut():
    assert cut_polynomial_xor(complete_graph(3))[3] == 0


def test_unshifted_naive_product_agrees():
    # the full, unpruned product with the original Laurent exponents
    for g in (complete_graph(2), complete_graph(3), path_graph(3)):
        assert cut_polynomial_laurent(g, shift=False, max_work=None) == cut_polynomial_xor(g)
    full = expand(cut_partition_factors(complete_graph(2)))
    for j in range(1, 5):
        full = full.extract_coefficient(xor_var(j, 0), 2)
    assert full.to_poly() == [2, 2]


def test_guards():
    with pytest.raises(WorkLimitExceeded, match="XOR route"):
        cut_polynomial_laurent(cycle_graph(6), max_work=2)
    with pytest.raises(WorkLimitExceeded):
        cut_polynomial_xor(empty_graph(31))
    with pytest.raises(ValueError):
        cut_polynomial_xor(empty_graph(0))


def test_xor_chunking_agrees():
    g = hypercube_graph(3)
    assert cut_polynomial_xor(g, chunk_bits=2) == cut_polynomial_xor(g) == brute_cut(g)


def test_expected_cut():
    assert expected_random_cut(Poly(FIG1_CUT)) == Fraction(7, 2)
    assert expected_random_cut(Poly([1, 0, 3])) == Fraction(3, 2)
    assert expected_random_cut(Poly([4])) == 0
    with pytest.raises(ValueError):
        expected_random_cut(Poly())


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_cut_properties(g):
    pw = cut_polynomial_xor(g)
    assert pw == brute_cut(g)
    assert pw(1) == 2 ** (g.n - 1)
    assert expected_random_cut(pw) == Fraction(g.m, 2)
    assert cut_polynomial_laurent(g) == pw


def test_bipartite_and_odd_cycles():
    for g in (hypercube_graph(3), cycle_graph(6), path_graph(5)):
        assert cut_polynomial_xor(g)[g.m] >= 1
    for n in (3, 5, 7):
        g = cycle_graph(n)
        assert cut_polynomial_xor(g)[g.m] == 0
        assert cut_polynomial_laurent(g)[g.m] == 0


def test_disconnected_counts_unordered_bipartitions():
    g = Graph.from_edges([(1, 2), (3, 4)], 4)
    assert cut_polynomial_laurent(g) == cut_polynomial_xor(g) == [2, 4, 2]
