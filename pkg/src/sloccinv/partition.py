"""Bipartitions of qubits and the coefficient matrix of a state.

A partition splits qubits 1..n into an ordered row block and its complement.
The coefficient matrix lays the amplitude vector out on that grid: row bits
come from the row block in the order written (first listed qubit is the most
significant row bit), column bits from the complement in ascending qubit
order, whatever order the text label used.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .state import MAX_QUBITS, PureState


class PartitionError(ValueError):
    """A partition label failed to parse or is inconsistent."""


@dataclass(frozen=True)
class Partition:
    """Ordered bipartition of qubits 1..n into row_block and col_block."""

    n: int
    row_block: tuple[int, ...]
    col_block: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise PartitionError(f"qubit count must be in 1..{MAX_QUBITS}")
        row = tuple(int(q) for q in self.row_block)
        col = tuple(int(q) for q in self.col_block)
        if not row or not col:
            raise PartitionError("both sides of a partition must be non-empty")
        seen = set(row) | set(col)
        if len(row) + len(col) != len(seen):
            raise PartitionError("duplicate qubit index in partition")
        if seen != set(range(1, self.n + 1)):
            bad = seen - set(range(1, self.n + 1))
            if bad:
                raise PartitionError(f"qubit index out of range: {sorted(bad)}")
            missing = set(range(1, self.n + 1)) - seen
            raise PartitionError(f"qubit indices missing from partition: {sorted(missing)}")
        if col != tuple(sorted(col)):
            raise PartitionError("column block must be stored in ascending order")
        object.__setattr__(self, "row_block", row)
        object.__setattr__(self, "col_block", col)

    @classmethod
    def from_row_block(cls, n: int, row_block) -> "Partition":
        row = tuple(int(q) for q in row_block)
        col = tuple(q for q in range(1, n + 1) if q not in row)
        return cls(n, row, col)

    @property
    def label(self) -> str:
        """Canonical text form, e.g. '12|34'; comma form once indices exceed 9."""
        if self.n <= 9:
            return "".join(map(str, self.row_block)) + "|" + "".join(map(str, self.col_block))
        return ",".join(map(str, self.row_block)) + "|" + ",".join(map(str, self.col_block))


@dataclass(frozen=True, eq=False)
class CoeffMatrix:
    """2**i x 2**(n-i) amplitude grid for a partition with |row_block| = i."""

    partition: Partition
    entries: np.ndarray


def _parse_side(side: str, n: int) -> list[int]:
    if not side:
        raise PartitionError("empty side in partition")
    tokens = side.split(",") if "," in side else list(side)
    out = []
    for tok in tokens:
        if not tok.isdigit():
            raise PartitionError(f"invalid qubit index {tok!r}")
        q = int(tok)
        if not 1 <= q <= n:
            raise PartitionError(f"qubit index {q} out of range 1..{n}")
        out.append(q)
    return out


def parse_partition(text: str, n: int) -> Partition:
    """Parse 'd1d2|e1e2' or 'd1,d2|e1,e2' into a Partition.

    Row order is preserved as written; the column block is stored ascending
    regardless of the written order.  Indices above 9 need the comma form.
    """
    parts = text.split("|")
    if len(parts) != 2:
        raise PartitionError(f"partition must contain exactly one '|': {text!r}")
    row = _parse_side(parts[0], n)
    col = _parse_side(parts[1], n)
    if len(set(row)) != len(row) or len(set(col)) != len(col) or set(row) & set(col):
        raise PartitionError(f"duplicate qubit index in {text!r}")
    if set(row) | set(col) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - (set(row) | set(col)))
        raise PartitionError(f"qubit indices missing from partition: {missing}")
    return Partition(n, tuple(row), tuple(sorted(col)))


def build_coeff_matrix(state: PureState, partition: Partition) -> CoeffMatrix:
    """Coefficient matrix of ``state`` for ``partition``.

    Entry (r, c) is amps[k] where k's bits at the row-block positions spell r
    and its bits at the column-block positions spell c.
    """
    if partition.n != state.n:
        raise ValueError(f"partition is for n={partition.n}, state has n={state.n}")
    entries = _backend.coeff_matrix(state.amps, state.n, np.asarray(partition.row_block, dtype=np.intc))
    entries.flags.writeable = False
    return CoeffMatrix(partition, entries)
