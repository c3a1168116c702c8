"""Classical q-ary codes mapped into quantum state space.

The package builds finite fields GF(q) and, in characteristic 2, the
Galois rings GR(4, n); constructs the complete set of q+1 mutually
unbiased bases; turns q-ary words into Hermitian face/facet operators
whose Hilbert-Schmidt geometry reproduces Hamming geometry exactly; and
assembles discrete Wigner functions from the simplex code and its cosets,
with negativity and polytope-membership diagnostics.
"""

from .codes import (
    CosetTable,
    LinearCode,
    Word,
    coset_table,
    dual,
    hamming_bound,
    hamming_code,
    hamming_distance,
    is_mds,
    is_perfect,
    simplex_code,
    singleton_bound,
    weight_distribution,
)
from .faceops import (
    FaceLabel,
    FaceOperator,
    PurityStats,
    conjugate_label,
    face_operator,
    fs_distance,
    hs_distance,
    identity_offset,
    jam_state,
    predicted_overlap,
    predicted_overlap_unit_trace,
    purity_stats,
    trace_distance,
    unit_trace_face_operator,
    wh_orbit,
)
from .fields import Field, FieldElement, field_of_order, is_prime
from .linalg import (
    DEFAULT_TOL,
    hermiticity_defect,
    hs_inner,
    is_hermitian,
    kron,
    matrix_from_json,
    matrix_to_json,
    max_entangled,
    partial_trace_first,
    random_pure_state,
    state_from_json,
    vector_from_json,
    vector_to_json,
)
from .mub import (
    INFINITY,
    MubSet,
    WeylOp,
    canonical_basis_labels,
    clock_op,
    conjugated_mub_label,
    overlap_deviation,
    shift_op,
    stabilizer_projector,
    weyl_op,
)
from .rings import GaloisRing, RingElement
from .suite import CheckResult, run as run_checks
from .wigner import (
    DiscreteWigner,
    PolytopeReport,
    PositivitySurvey,
    parity_deviation,
    parity_matrix,
    polytope_minimum,
    polytope_minimum_exhaustive,
    positivity_survey,
    stabilizer_count,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Field",
    "FieldElement",
    "field_of_order",
    "is_prime",
    "GaloisRing",
    "RingElement",
    "Word",
    "LinearCode",
    "CosetTable",
    "hamming_distance",
    "simplex_code",
    "hamming_code",
    "dual",
    "coset_table",
    "weight_distribution",
    "hamming_bound",
    "singleton_bound",
    "is_perfect",
    "is_mds",
    "DEFAULT_TOL",
    "hermiticity_defect",
    "hs_inner",
    "is_hermitian",
    "kron",
    "partial_trace_first",
    "max_entangled",
    "random_pure_state",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "state_from_json",
    "INFINITY",
    "canonical_basis_labels",
    "MubSet",
    "overlap_deviation",
    "shift_op",
    "clock_op",
    "WeylOp",
    "weyl_op",
    "stabilizer_projector",
    "conjugated_mub_label",
    "FaceLabel",
    "FaceOperator",
    "identity_offset",
    "face_operator",
    "unit_trace_face_operator",
    "predicted_overlap",
    "predicted_overlap_unit_trace",
    "hs_distance",
    "trace_distance",
    "fs_distance",
    "jam_state",
    "conjugate_label",
    "wh_orbit",
    "PurityStats",
    "purity_stats",
    "DiscreteWigner",
    "PolytopeReport",
    "polytope_minimum",
    "polytope_minimum_exhaustive",
    "parity_matrix",
    "parity_deviation",
    "PositivitySurvey",
    "positivity_survey",
    "stabilizer_count",
    "CheckResult",
    "run_checks",
]
