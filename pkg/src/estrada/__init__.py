"""Estrada index computation and verified spectral lower bounds.

The package computes adjacency spectra of simple undirected graphs with
a cyclic Jacobi solver, derives the Estrada index, graph energy, and
degree-based indices, evaluates a catalog of fourteen lower bounds with
their equality families, and ships a verification harness that checks
every bound over exhaustive small-graph enumeration, named families, and
seeded random models.
"""

from ._kernels import USING_NUMBA
from .bounds import (
    BOUND_IDS,
    CATALOG,
    EQUALITY_BOUND_IDS,
    LEMMA_IDS,
    LEMMAS,
    BoundResult,
    BoundSpec,
    RemarkVerdict,
    equality_class_check,
    evaluate_all_bounds,
    evaluate_bound,
    phi,
    phi_bipartite,
    remark_family_check,
)
from .errors import (
    CapacityError,
    ConsistencyError,
    ConvergenceError,
    DegenerateGraphError,
    DomainError,
    EstradaError,
    FormatError,
    GraphConstructionError,
    ParameterError,
)
from .families import (
    FAMILY_NAMES,
    bipartite_random,
    complete_bipartite,
    complete_graph,
    cycle,
    disjoint_union,
    empty_graph,
    er_random,
    generate_family,
    path,
    regular_circulant,
    star,
)
from .graphs import (
    ENUMERATION_MAX_N,
    Classification,
    Graph,
    enumerate_graphs,
    pair_index,
)
from .harness import (
    GraphRow,
    GraphVerdict,
    VerificationReport,
    Violation,
    exhaustive_verify,
    family_sweep,
    find_equality_cases,
    random_campaign,
    verify_collection,
    verify_graph,
)
from .invariants import InvariantSet, general_randic, invariant_set, randic_index
from .io import (
    GraphDocument,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .reports import report_to_dict, report_to_json, row_to_csv, write_rows_csv
from .spectral import (
    Spectrum,
    eigen_symmetric,
    estrada_index,
    estrada_index_series,
    graph_energy,
    spectral_moment,
    spectrum,
)

__version__ = "1.0.0"

__all__ = [
    "BOUND_IDS",
    "CATALOG",
    "Classification",
    "EQUALITY_BOUND_IDS",
    "ENUMERATION_MAX_N",
    "FAMILY_NAMES",
    "LEMMAS",
    "LEMMA_IDS",
    "BoundResult",
    "BoundSpec",
    "CapacityError",
    "ConsistencyError",
    "ConvergenceError",
    "DegenerateGraphError",
    "DomainError",
    "EstradaError",
    "FormatError",
    "Graph",
    "GraphConstructionError",
    "GraphDocument",
    "GraphRow",
    "GraphVerdict",
    "InvariantSet",
    "ParameterError",
    "RemarkVerdict",
    "Spectrum",
    "USING_NUMBA",
    "VerificationReport",
    "Violation",
    "bipartite_random",
    "complete_bipartite",
    "complete_graph",
    "cycle",
    "disjoint_union",
    "eigen_symmetric",
    "empty_graph",
    "enumerate_graphs",
    "equality_class_check",
    "er_random",
    "estrada_index",
    "estrada_index_series",
    "evaluate_all_bounds",
    "evaluate_bound",
    "exhaustive_verify",
    "family_sweep",
    "find_equality_cases",
    "general_randic",
    "generate_family",
    "graph_energy",
    "invariant_set",
    "iter_graph6",
    "pair_index",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "phi",
    "phi_bipartite",
    "randic_index",
    "random_campaign",
    "regular_circulant",
    "remark_family_check",
    "report_to_dict",
    "report_to_json",
    "row_to_csv",
    "spectral_moment",
    "spectrum",
    "star",
    "verify_collection",
    "verify_graph",
    "write_graph6",
    "write_rows_csv",
    "__version__",
]
