"""Exact tools for absolute maximal entanglement of qudit graph states.

The package decides whether a multigraph's graph state is absolutely
maximally entangled, cross-checks the decision with an independent dense
numerical oracle, and, for vertex counts divisible by 4 with even local
dimension, constructs an explicit low-weight stabilizer element certifying
the negative answer.
"""

from .graphs import (
    GraphFormatError,
    Multigraph,
    enumerate_graphs,
    from_edge_list,
    graph_count,
    graph_from_index,
    load_graph,
    parse_graph,
    random_graph,
    serialize_graph,
)
from .pauli import SymplecticPauli, element, format_pauli, generator
from .verify import AmeVerdict, BudgetExceededError, is_ame_bruteforce, min_stabilizer_weight
from .dense import StateVector, graph_state, is_ame_dense, partial_trace, pauli_matrix
from .witness import (
    InvariantViolationError,
    TheoremContradictionError,
    WitnessReport,
    build_system,
    deltas,
    extract_witness,
    signed_delta_sum,
)
from .zdlinalg import det_int, is_unit, kernel_nonzero, smith_normal_form
from .sweep import RegressionRow, SweepReport, cycle_graph, parity_check, regression, search

__all__ = [
    "AmeVerdict",
    "BudgetExceededError",
    "GraphFormatError",
    "InvariantViolationError",
    "Multigraph",
    "RegressionRow",
    "StateVector",
    "SweepReport",
    "SymplecticPauli",
    "TheoremContradictionError",
    "WitnessReport",
    "build_system",
    "cycle_graph",
    "deltas",
    "det_int",
    "element",
    "enumerate_graphs",
    "extract_witness",
    "format_pauli",
    "from_edge_list",
    "generator",
    "graph_count",
    "graph_from_index",
    "graph_state",
    "is_ame_bruteforce",
    "is_ame_dense",
    "is_unit",
    "kernel_nonzero",
    "load_graph",
    "min_stabilizer_weight",
    "parity_check",
    "parse_graph",
    "partial_trace",
    "pauli_matrix",
    "random_graph",
    "regression",
    "search",
    "serialize_graph",
    "signed_delta_sum",
    "smith_normal_form",
]
