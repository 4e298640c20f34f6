"""Reproducible random states and determinant-1 local operators.

Everything is driven by a SeededGenerator wrapping numpy's PCG64 stream, so
a (seed, draw order) pair fixes every sampled object.  The rejection bounds
on the operator sampler (|det| >= 0.1 before normalization, operator norm
<= 4 after) keep the conditioning of Kronecker products of sampled
operators small enough that the Monte Carlo identity suites stay well
inside their tolerances.
"""

from __future__ import annotations

import numpy as np

from .fmatrix import LocalOperator
from .state import MAX_QUBITS, PureState

_MAX_RESAMPLE = 1000


class SeededGenerator:
    """Deterministic random stream from a 64-bit seed (PCG64).

    Identical seeds give identical draw sequences for a fixed numpy version;
    the PCG64 bit stream itself is platform-independent.
    """

    def __init__(self, seed: int, _seq: np.random.SeedSequence | None = None):
        if not 0 <= int(seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = int(seed)
        self._seq = np.random.SeedSequence(self.seed) if _seq is None else _seq
        self._gen = np.random.Generator(np.random.PCG64(self._seq))

    def split(self, index: int) -> "SeededGenerator":
        """Independent child stream for trial ``index``.

        Children are derived through numpy's SeedSequence spawn keys, i.e.
        seeded by (seed, index), so concurrent trials can draw without
        sharing state and aggregate results independent of ordering.
        """
        return SeededGenerator(self.seed, _seq=np.random.SeedSequence(self.seed, spawn_key=(int(index),)))

    def standard_normal(self, size=None):
        return self._gen.standard_normal(size)

    def __repr__(self):
        return f"SeededGenerator(seed={self.seed})"


def random_state(n: int, gen: SeededGenerator) -> PureState:
    """Unit-norm n-qubit state; re and im parts i.i.d. standard normal, then
    the vector is scaled to norm 1."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_QUBITS}, got {n}")
    z = gen.standard_normal(2**n) + 1j * gen.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))


def random_sl2(gen: SeededGenerator) -> LocalOperator:
    """Random determinant-1 operator: a complex Gaussian 2x2 matrix,
    rejected while |det| < 0.1, divided by the principal square root of its
    determinant, and rejected again if its operator norm exceeds 4."""
    for _ in range(_MAX_RESAMPLE):
        a = gen.standard_normal((2, 2)) + 1j * gen.standard_normal((2, 2))
        det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        if abs(det) < 0.1:
            continue
        a = a / np.sqrt(det)
        if np.linalg.norm(a, 2) > 4:
            continue
        return LocalOperator(a)
    raise RuntimeError("operator sampling failed to pass rejection bounds")


def random_local_ops(n: int, gen: SeededGenerator) -> list[LocalOperator]:
    """n independent determinant-1 operators from one stream."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_QUBITS}, got {n}")
    return [random_sl2(gen) for _ in range(n)]
