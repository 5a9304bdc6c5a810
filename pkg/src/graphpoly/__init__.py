"""Counting polynomials of simple graphs: independent sets, cliques, vertex covers, cuts."""
from .cut import (
    build_cut_system,
    cut_partition_factors,
    cut_polynomial_laurent,
    cut_polynomial_xor,
    expected_random_cut,
    laurent_vertex_monomials,
    xor_truth_table_check,
)
from .derived import clique_number, clique_polynomial, covering_number, vertex_cover_polynomial
from .errors import GraphFormatError, VerificationError, WorkLimitExceeded
from .graph import (
    Graph,
    complement,
    incidence_matrices,
    incident_edges,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
)
from .indep import (
    enumerate_independent_sets,
    esp_nil_recursion,
    independence_number,
    independence_polynomial,
    maximal_independent_sets,
    nilpotency_index,
)
from .multipoly import (
    MultiPoly,
    VarId,
    build_partition_function,
    cover_poly_by_extraction,
    indep_poly_by_extraction,
    nested_extraction,
)
from .poly import Poly

__version__ = "0.1.0"
