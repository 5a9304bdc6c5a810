"""
The same polynomials by coefficient extraction
==============================================

The partition function is a product of ``(1 + z * Z_E(v))`` over vertices and
``(1 + z_e)`` over edges. The coefficient of ``prod z_e`` is the independence
polynomial and the coefficient of ``prod z_e**2`` is the vertex-cover
polynomial. Factors are multiplied in one at a time and hopeless terms are
dropped early, so the full product is never formed.
"""

# %%
import time

from graphpoly import build_partition_function, nested_extraction, parse_edge_list
from graphpoly.multipoly import edge_var, expand

g = parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6\n")
factors = build_partition_function(g)
print(len(factors), "factors; first:", factors[0])

# %%
for power, name in ((1, "independent sets"), (2, "vertex covers")):
    targets = {edge_var(e): power for e in range(g.m)}
    t = time.perf_counter()
    p = nested_extraction(factors, targets)
    print(f"{name:16s} {p}   ({1000 * (time.perf_counter() - t):.1f} ms)")

# %%
# For comparison, the fully expanded product.
full = expand(factors)
print("terms in the full expansion:", len(full))
slice_ = full
for e in reversed(range(g.m)):
    slice_ = slice_.extract_coefficient(edge_var(e), 1)
print("extracted from the expansion:", slice_.to_poly())
