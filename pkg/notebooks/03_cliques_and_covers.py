"""
Cliques and vertex covers
=========================

Cliques of a graph are independent sets of its complement; vertex covers are
complements of independent sets, which reverses the coefficient list.
"""

# %%
from graphpoly import (
    clique_polynomial,
    complement,
    covering_number,
    independence_number,
    independence_polynomial,
    parse_edge_list,
    vertex_cover_polynomial,
)
from graphpoly.oracle import brute_clique, brute_cover

g = parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6\n")
gc = complement(g)
print("complement edges:", gc.edges)

# %%
print("cliques:       ", clique_polynomial(g), " brute force:", brute_clique(g))
print("vertex covers: ", vertex_cover_polynomial(g), " brute force:", brute_cover(g))
print("independence:  ", independence_polynomial(g))

# %%
alpha, beta = independence_number(g), covering_number(g)
print(f"alpha + beta = {alpha} + {beta} = {alpha + beta} = n")
