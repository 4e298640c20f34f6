"""SLOCC invariants of n-qubit pure states from square-matrix
characteristic polynomials.

The library reshapes a state's amplitude vector into a coefficient matrix C
for a qubit bipartition, forms the square matrix F = V_i C V_(n-i) C^T, and
uses the monic characteristic polynomial of F as a SLOCC-invariant
fingerprint.  Closed-form three- and four-qubit invariants (3-tangle and the
degree 2/4/4/6 quadruple H, L, M, D) are provided along with the identities
tying them to fingerprint coefficients, a reproducible sampler, and strict /
projective inequivalence tests.
"""

from ._backend import BACKEND as kernel_backend
from .charpoly import CharPoly, char_poly, eval_charpoly
from .equivalence import (
    INDISTINGUISHABLE,
    INEQUIVALENT,
    Fingerprint,
    Verdict,
    Witness,
    canonical_partitions,
    compare_projective,
    compare_strict,
    fingerprint,
)
from .fmatrix import (
    FMatrix,
    LocalOperator,
    apply_local_ops,
    build_f,
    transform_f,
    v_kron,
)
from .invariants import (
    InvariantSet,
    RelationResidualReport,
    dxt_printed,
    f1_3,
    inv_dxt,
    inv_h,
    inv_l,
    inv_m,
    invariant_set,
    relation_residuals,
    tangle3,
)
from .partition import (
    CoeffMatrix,
    Partition,
    PartitionError,
    build_coeff_matrix,
    parse_partition,
)
from .sampler import SeededGenerator, random_local_ops, random_sl2, random_state
from .selftest import SelfTestReport, run_selftest
from .state import (
    MAX_QUBITS,
    PureState,
    StateFormatError,
    parse_state,
    serialize_state,
    state_norm,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "CoeffMatrix",
    "FMatrix",
    "Fingerprint",
    "INDISTINGUISHABLE",
    "INEQUIVALENT",
    "InvariantSet",
    "LocalOperator",
    "MAX_QUBITS",
    "Partition",
    "PartitionError",
    "PureState",
    "RelationResidualReport",
    "SeededGenerator",
    "SelfTestReport",
    "StateFormatError",
    "Verdict",
    "Witness",
    "apply_local_ops",
    "build_coeff_matrix",
    "build_f",
    "canonical_partitions",
    "char_poly",
    "compare_projective",
    "compare_strict",
    "dxt_printed",
    "eval_charpoly",
    "f1_3",
    "fingerprint",
    "inv_dxt",
    "inv_h",
    "inv_l",
    "inv_m",
    "invariant_set",
    "kernel_backend",
    "parse_partition",
    "parse_state",
    "random_local_ops",
    "random_sl2",
    "random_state",
    "relation_residuals",
    "run_selftest",
    "serialize_state",
    "state_norm",
    "tangle3",
    "transform_f",
    "v_kron",
]
