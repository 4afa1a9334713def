"""Exact-arithmetic critical groups of graphs and signed graphs.

Computes Laplacian cokernels over the integers, explicit order-achieving
decompositions, the monodromy pairing, orthogonal edge sets and the
subgroup bounds they force, plus a feasibility scan over strongly regular
parameter tuples. Everything is exact; no floating point anywhere.
"""

from .errors import (
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    InternalCheckError,
    StructureError,
)
from .graphs import (
    GENERATOR_FAMILIES,
    BalanceResult,
    Graph,
    SignedGraph,
    SignedTwoEigenvalueParams,
    SrgParameters,
    TwoEigenvalueParams,
    UnbalancedTriangle,
    clebsch_complement,
    complement,
    complete,
    complete_multipartite,
    cycle,
    detect_signed_two_eigenvalue,
    detect_srg,
    detect_two_eigenvalue,
    disjoint_union,
    edge_key,
    find_unbalanced_triangle,
    format_graph,
    generate,
    graph_join,
    is_balanced,
    make_graph,
    make_signed_graph,
    net_common_neighbors,
    paley,
    parse_graph,
    petersen,
    read_graph_file,
    signed_complete_unbalanced,
    star,
    switch,
)
from .groups import (
    AbelianGroup,
    Decomposition,
    ExponentReport,
    Witnesses,
    complete_multipartite_parts,
    critical_group,
    decomposition,
    edge_difference,
    element_order,
    is_balanced_complete_bipartite,
    is_star,
    laplacian_snf,
    spanning_tree_count,
    subgroup_invariant_factors,
    verify_exponent_theorem,
    verify_spectral_bound,
    vertex_indicator,
    witnesses,
)
from .linalg import (
    IntMatrix,
    Polynomial,
    SnfResult,
    char_poly,
    determinant,
    distinct_nonzero_eigenvalue_product,
    gershgorin_bound,
    integer_roots,
    kernel_basis_rows,
    laplacian,
    polynomial_gcd,
    smith_normal_form,
    solve_rational,
    squarefree_part,
)
from .pairing import (
    OrthogonalSet,
    PairingValue,
    TailHeavyReport,
    check_subgroup_divisibility,
    edge_pairing_closed_form,
    monodromy_pairing,
    orthogonal_subset,
    self_pairing_denominator,
    subgroup_bound,
    verify_tail_heavy,
)
from .scan import (
    KNOWN_TIGHT_TUPLES,
    SCAN_NOTE,
    FeasibleTuple,
    enumerate_feasible,
    scan_tight_denominators,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BalanceResult",
    "Decomposition",
    "DisconnectedGraphError",
    "ExponentReport",
    "FeasibleTuple",
    "GENERATOR_FAMILIES",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "IntMatrix",
    "InternalCheckError",
    "KNOWN_TIGHT_TUPLES",
    "OrthogonalSet",
    "PairingValue",
    "Polynomial",
    "SCAN_NOTE",
    "SignedGraph",
    "SignedTwoEigenvalueParams",
    "SnfResult",
    "SrgParameters",
    "StructureError",
    "TailHeavyReport",
    "TwoEigenvalueParams",
    "UnbalancedTriangle",
    "Witnesses",
    "char_poly",
    "check_subgroup_divisibility",
    "clebsch_complement",
    "complement",
    "complete",
    "complete_multipartite",
    "complete_multipartite_parts",
    "critical_group",
    "cycle",
    "decomposition",
    "determinant",
    "detect_signed_two_eigenvalue",
    "detect_srg",
    "detect_two_eigenvalue",
    "disjoint_union",
    "distinct_nonzero_eigenvalue_product",
    "edge_difference",
    "edge_key",
    "edge_pairing_closed_form",
    "element_order",
    "enumerate_feasible",
    "find_unbalanced_triangle",
    "format_graph",
    "generate",
    "gershgorin_bound",
    "graph_join",
    "integer_roots",
    "is_balanced",
    "is_balanced_complete_bipartite",
    "is_star",
    "kernel_basis_rows",
    "laplacian",
    "polynomial_gcd",
    "laplacian_snf",
    "make_graph",
    "make_signed_graph",
    "monodromy_pairing",
    "net_common_neighbors",
    "orthogonal_subset",
    "paley",
    "parse_graph",
    "petersen",
    "read_graph_file",
    "scan_tight_denominators",
    "self_pairing_denominator",
    "signed_complete_unbalanced",
    "smith_normal_form",
    "solve_rational",
    "spanning_tree_count",
    "squarefree_part",
    "star",
    "subgroup_bound",
    "subgroup_invariant_factors",
    "switch",
    "verify_exponent_theorem",
    "verify_spectral_bound",
    "verify_tail_heavy",
    "vertex_indicator",
    "witnesses",
]
