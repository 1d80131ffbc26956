"""Braid-gate calculus for topological quantum computing with cabled anyons.

Evaluates plat-closed braid words on four adjoint cables as quantum gates in
Chern-Simons / quantum-group data (parameters k, N), computes the probability
of staying in computational space and the entangling phase, verifies
tensor-product multiplicities, and searches braid space for high-fidelity
entangling operations.
"""

from .cables import CableBasis, CableSet, CrossingKind, cable_matrices, crossing_operator
from .core import (
    BranchInconsistencyError,
    DegenerateParamsError,
    NegativeRadicandError,
    TheoryParams,
    qint,
    theory_params,
)
from .fusion import (
    InvalidLabelError,
    RepLabel,
    schur_weyl_oracle,
    tensor_decompose,
    trivial_multiplicity,
    weyl_dimension,
)
from .onequbit import (
    GateApproximation,
    MalformedSequenceError,
    OneQubitSet,
    approximate_gate,
    evaluate_sequence,
    gate_distance,
    one_qubit_matrices,
)
from .plat import (
    BraidWord,
    DiagonalGate,
    EvalResult,
    NonIdentityPermutationError,
    PlatDiagram,
    assign_crossing_kinds,
    evaluate_braid,
    parse_ascii,
    plat_connectivity,
    render_ascii,
    two_qubit_gate,
    word_from_json,
    word_from_text,
    word_to_json,
    word_to_text,
)
from .search import (
    Candidate,
    SearchConfig,
    SearchResult,
    canonicalize,
    enumerate_gate_words,
    result_to_csv,
    result_to_json,
    search_entangling,
    search_with_fallback,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BranchInconsistencyError",
    "CableBasis",
    "CableSet",
    "Candidate",
    "CrossingKind",
    "DegenerateParamsError",
    "DiagonalGate",
    "EvalResult",
    "GateApproximation",
    "InvalidLabelError",
    "MalformedSequenceError",
    "NegativeRadicandError",
    "NonIdentityPermutationError",
    "OneQubitSet",
    "PlatDiagram",
    "RepLabel",
    "SearchConfig",
    "SearchResult",
    "TheoryParams",
    "approximate_gate",
    "assign_crossing_kinds",
    "cable_matrices",
    "canonicalize",
    "crossing_operator",
    "enumerate_gate_words",
    "evaluate_braid",
    "evaluate_sequence",
    "gate_distance",
    "one_qubit_matrices",
    "parse_ascii",
    "plat_connectivity",
    "qint",
    "render_ascii",
    "result_to_csv",
    "result_to_json",
    "schur_weyl_oracle",
    "search_entangling",
    "search_with_fallback",
    "tensor_decompose",
    "theory_params",
    "trivial_multiplicity",
    "two_qubit_gate",
    "weyl_dimension",
    "word_from_json",
    "word_from_text",
    "word_to_json",
    "word_to_text",
]
