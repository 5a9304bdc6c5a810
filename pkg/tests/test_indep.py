from itertools import combinations

import pytest
from hypothesis import given, settings

from graphpoly.graph import complete_graph, cycle_graph, empty_graph, hypercube_graph, path_graph
from graphpoly.indep import (
    enumerate_independent_sets,
    esp_nil_recursion,
    independence_number,
    independence_polynomial,
    maximal_independent_sets,
    nilpotency_index,
    vertex_monomials,
)
from graphpoly.nilalgebra import product_of, term_count
from graphpoly.oracle import brute_independence
from graphpoly.errors import WorkLimitExceeded

from conftest import graphs


def test_esp_fig1(fig1):
    layers = esp_nil_recursion(fig1)
    assert [term_count(layer) for layer in layers] == [1, 6, 8, 2]
    assert layers[0] == {0: 1}


def test_esp_empty_graph_multiplicities():
    # every vertex monomial is 1, so all terms collapse onto the empty EdgeSet
    layers = esp_nil_recursion(empty_graph(3))
    assert layers == [{0: 1}, {0: 3}, {0: 3}, {0: 1}]


def test_esp_k3_stops_at_alpha():
    layers = esp_nil_recursion(complete_graph(3))
    assert len(layers) == 2


def test_independence_polynomial_examples(fig1):
    assert independence_polynomial(fig1) == [1, 6, 8, 2]
    assert independence_polynomial(complete_graph(2)) == [1, 2]
    # P3 frozen from brute force over all 8 subsets
    assert brute_independence(path_graph(3)) == [1, 3, 1]
    assert independence_polynomial(path_graph(3)) == [1, 3, 1]


def test_independence_number(fig1):
    assert independence_number(fig1) == 3
    assert independence_number(complete_graph(5)) == 1
    assert independence_number(empty_graph(4)) == 4
    assert independence_number(empty_graph(0)) == 0


def test_nilpotency_index(fig1):
    assert nilpotency_index(fig1) == 4
    assert nilpotency_index(complete_graph(3)) == 2
    # frozen from brute force: alpha(C5) = 2
    assert brute_independence(cycle_graph(5)).degree == 2
    assert nilpotency_index(cycle_graph(5)) == 3


def test_enumerate_fig1(fig1):
    assert enumerate_independent_sets(fig1, 3) == [(1, 4, 5), (2, 4, 5)]
    assert enumerate_independent_sets(fig1, 0) == [()]
    assert enumerate_independent_sets(fig1, 4) == []


def test_enumerate_range(fig1):
    with pytest.raises(ValueError):
        enumerate_independent_sets(fig1, 7)
    with pytest.raises(ValueError):
        enumerate_independent_sets(fig1, -1)


def test_enumerate_with_isolated_vertices():
    g = empty_graph(3)
    assert enumerate_independent_sets(g, 2) == [(1, 2), (1, 3), (2, 3)]


def test_q3_maximal_sets():
    sets = maximal_independent_sets(hypercube_graph(3))
    assert len(sets) == 6
    assert sorted(len(s) for s in sets) == [2, 2, 2, 2, 4, 4]


def test_work_limit():
    with pytest.raises(WorkLimitExceeded):
        independence_polynomial(empty_graph(12), max_work=3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_matches_oracle(g):
    p = independence_polynomial(g)
    assert p == brute_independence(g)
    assert p[0] == 1 and p[1] == g.n and p[2] == g.n * (g.n - 1) // 2 - g.m


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_enumeration_is_exact(g):
    p = independence_polynomial(g)
    adj = {frozenset(e) for e in g.edges}
    for k in range(g.n + 1):
        sets = enumerate_independent_sets(g, k)
        assert len(sets) == p[k]
        assert sets == sorted(sets)
        expect = [s for s in combinations(range(1, g.n + 1), k)
                  if not any(frozenset(q) in adj for q in combinations(s, 2))]
        assert sets == expect


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_nilpotency_witness_and_exhaustive(g):
    alpha = independence_number(g)
    mons = vertex_monomials(g)
    assert any(product_of(c) is not None for c in combinations(mons, alpha))
    assert all(product_of(c) is None for c in combinations(mons, alpha + 1))
    assert nilpotency_index(g) == alpha + 1
