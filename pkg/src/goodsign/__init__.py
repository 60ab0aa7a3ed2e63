"""Edge signings of graphs: constructions, spectra, and good-signing checks.

A signing assigns -1 or +1 to every edge; a signing of a d-regular graph is
good when the spectral radius of its signed adjacency matrix is at most
``2*sqrt(d-1)`` (``2*sqrt(max_degree-1)`` in the irregular variant). This
package builds signings of complete graphs from conference-matrix cores,
signs lexicographic products and 2-lifts, verifies the bound with a dense
Jacobi eigensolver, validates equitable partitions exactly in integers, and
searches all switching classes of small graphs exhaustively.
"""

from .conference import ConferenceMatrix, core_matrix, normalize, paley_conference, verify_conference
from .constructions import (
    LiftPairing,
    case_cells,
    case_quotient_eigenvalues,
    case_quotient_matrix,
    lex_k2_signing,
    lex_k4_signing,
    lift_pairing,
    pair_cell_partition,
    sign_complete_from_conference,
    signing_equivalence,
    switching_witness_cycle,
    two_lift,
    two_lift_signed,
)
from .graphs import (
    DecompositionReport,
    Graph,
    SignedGraph,
    complete_graph,
    cycle_graph,
    entrywise_product,
    is_bipartite,
    lexicographic_product,
    path_graph,
    petersen_graph,
    signed_adjacency,
    verify_decomposition,
)
from .partition import (
    EquitabilityWitness,
    NotEquitableError,
    Partition,
    QuotientMatrix,
    characteristic_matrix,
    is_equitable,
    quotient_eigenvalues,
    quotient_matrix,
    signed_degree,
    verify_quotient_identity,
)
from .search import (
    SearchResult,
    SearchSpaceError,
    enumerate_signing_classes,
    find_good_signing,
    min_rho,
    signing_class_count,
)
from .spectra import (
    JacobiConvergenceError,
    JacobiResult,
    RamanujanReport,
    SpectralReport,
    check_good_signing,
    check_ramanujan,
    eigenvalues_symmetric,
    good_signing_bound,
    jacobi_diagonalize,
    multiset_within,
    multisets_close,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "ConferenceMatrix",
    "DecompositionReport",
    "EquitabilityWitness",
    "Graph",
    "JacobiConvergenceError",
    "JacobiResult",
    "LiftPairing",
    "NotEquitableError",
    "Partition",
    "QuotientMatrix",
    "RamanujanReport",
    "SearchResult",
    "SearchSpaceError",
    "SignedGraph",
    "SpectralReport",
    "case_cells",
    "case_quotient_eigenvalues",
    "case_quotient_matrix",
    "characteristic_matrix",
    "check_good_signing",
    "check_ramanujan",
    "complete_graph",
    "core_matrix",
    "cycle_graph",
    "eigenvalues_symmetric",
    "entrywise_product",
    "enumerate_signing_classes",
    "find_good_signing",
    "good_signing_bound",
    "is_bipartite",
    "is_equitable",
    "jacobi_diagonalize",
    "lex_k2_signing",
    "lex_k4_signing",
    "lexicographic_product",
    "lift_pairing",
    "min_rho",
    "multiset_within",
    "multisets_close",
    "normalize",
    "pair_cell_partition",
    "paley_conference",
    "path_graph",
    "petersen_graph",
    "quotient_eigenvalues",
    "quotient_matrix",
    "sign_complete_from_conference",
    "signed_adjacency",
    "signed_degree",
    "signing_class_count",
    "signing_equivalence",
    "spectral_radius",
    "switching_witness_cycle",
    "two_lift",
    "two_lift_signed",
    "verify_conference",
    "verify_decomposition",
    "verify_quotient_identity",
]
