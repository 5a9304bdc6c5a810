"""
Counting independent sets with nilpotent edge variables
=======================================================

Every vertex gets a monomial: the product of the variables of its edges.
Multiplying monomials of adjacent vertices squares a shared variable, and
squares are zero, so the surviving products are exactly the independent sets.
"""

# %%
from graphpoly import (
    enumerate_independent_sets,
    esp_nil_recursion,
    independence_polynomial,
    maximal_independent_sets,
    nilpotency_index,
    parse_edge_list,
)
from graphpoly.graph import hypercube_graph
from graphpoly.nilalgebra import edge_indices

g = parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6\n")
print(f"n={g.n}, m={g.m}, edges={g.edges}")

# %%
# The ESP table is built one vertex at a time. Each degree slice maps an
# edge set (bitmask) to a multiplicity.
layers = esp_nil_recursion(g)
for k, layer in enumerate(layers):
    shown = [[g.edges[i] for i in edge_indices(s)] for s in list(layer)[:3]]
    print(f"degree {k}: {sum(layer.values())} terms, e.g. {shown}")

# %%
p = independence_polynomial(g)
print("independence polynomial:", p)
print("alpha =", p.degree, " nilpotency index =", nilpotency_index(g))

# %%
# Carrying the vertex subsets through the same recursion lists the sets.
for k in range(p.degree + 1):
    print(k, enumerate_independent_sets(g, k))

# %%
# Maximal is not the same as maximum: the 3-cube has maximal sets of order 2
# and order 4.
for s in maximal_independent_sets(hypercube_graph(3)):
    print(len(s), s)
