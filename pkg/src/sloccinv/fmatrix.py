"""The square matrix F of a state and its transformation law.

F = V_i C V_(n-i) C^T, where C is the coefficient matrix of a bipartition
with |row_block| = i and V_k is the k-fold Kronecker power of
v = [[0, 1], [-1, 0]] (i times the Pauli-y matrix).  Under determinant-1
local operators A_1..A_n the state's F matrix changes by a similarity
transform, F -> (P^T)^-1 F P^T with P the Kronecker product of the
row-block operators, so its characteristic polynomial is invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .partition import Partition
from .state import MAX_QUBITS, PureState

UNIMODULAR_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """Invertible operator on a single qubit (2x2 complex matrix)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        if m.shape != (2, 2):
            raise ValueError(f"local operator must be 2x2, got shape {m.shape}")
        if not np.all(np.isfinite(m.view(np.float64))):
            raise ValueError("local operator entries must be finite")
        if m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] == 0:
            raise ValueError("local operator is singular")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def det(self) -> complex:
        m = self.matrix
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def is_unimodular(self, tol: float = UNIMODULAR_TOL) -> bool:
        return abs(self.det - 1.0) <= tol

    @classmethod
    def identity(cls) -> "LocalOperator":
        return cls(np.eye(2))


@dataclass(frozen=True, eq=False)
class FMatrix:
    """2**i x 2**i square matrix of a state for a partition with |row_block|=i."""

    partition: Partition
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def v_kron(k: int) -> np.ndarray:
    """k-fold Kronecker power of [[0,1],[-1,0]].

    An anti-diagonal signed permutation: entry (r, 2**k-1-r) equals
    (-1)**popcount(r); determinant exactly 1.
    """
    if not 1 <= k <= MAX_QUBITS:
        raise ValueError(f"k must be in 1..{MAX_QUBITS}, got {k}")
    size = 1 << k
    rows = np.arange(size, dtype=np.uint64)
    signs = np.where(np.bitwise_count(rows).astype(np.int64) & 1, -1.0, 1.0)
    out = np.zeros((size, size), dtype=np.complex128)
    out[np.arange(size), size - 1 - np.arange(size)] = signs
    return out


def build_f(state: PureState, partition: Partition) -> FMatrix:
    """F matrix of ``state`` for ``partition``."""
    if partition.n != state.n:
        raise ValueError(f"partition is for n={partition.n}, state has n={state.n}")
    entries = _backend.build_fmatrix(
        state.amps, state.n, np.asarray(partition.row_block, dtype=np.intc)
    )
    entries.flags.writeable = False
    return FMatrix(partition, entries)


def _as_operators(ops) -> list[LocalOperator]:
    return [op if isinstance(op, LocalOperator) else LocalOperator(op) for op in ops]


def apply_local_ops(state: PureState, ops) -> PureState:
    """State with amplitudes of (A_1 x A_2 x ... x A_n) |psi>."""
    ops = _as_operators(ops)
    if len(ops) != state.n:
        raise ValueError(f"need {state.n} operators, got {len(ops)}")
    stacked = np.stack([op.matrix for op in ops])
    amps = _backend.apply_local_ops(state.amps, state.n, stacked)
    return PureState(state.n, amps)


def transform_f(f: FMatrix, ops_on_row_block) -> FMatrix:
    """Similarity image (P^T)^-1 F P^T for row-block operators with det = 1.

    ``ops_on_row_block`` must list one unimodular operator per row-block
    qubit, in row-block order.  Equals build_f of the transformed state.
    """
    ops = _as_operators(ops_on_row_block)
    if len(ops) != len(f.partition.row_block):
        raise ValueError(
            f"need {len(f.partition.row_block)} operators for row block "
            f"{f.partition.row_block}, got {len(ops)}"
        )
    for op in ops:
        if not op.is_unimodular():
            raise ValueError(
                f"transform_f requires det = 1 operators; got det = {op.det:.6g}"
            )
    p = np.array([[1.0 + 0.0j]])
    for op in ops:
        p = np.kron(p, op.matrix)
    t = p.T
    entries = np.linalg.solve(t, f.entries) @ t
    entries.flags.writeable = False
    return FMatrix(f.partition, entries)
