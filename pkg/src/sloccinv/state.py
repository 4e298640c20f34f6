"""n-qubit pure states: representation, validation, parsing, serialization.

States are plain amplitude vectors.  No normalization is ever applied: every
invariant computed downstream is a polynomial in the amplitudes, and exact
identities between them (e.g. the constant fingerprint coefficient equaling a
squared determinant) only hold for the raw coefficients.  Callers who want
unit vectors normalize themselves.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 10


class StateFormatError(ValueError):
    """A state document failed to parse into a valid PureState."""


@dataclass(frozen=True, eq=False)
class PureState:
    """Unnormalized pure state of ``n`` qubits.

    ``amps[k]`` is the coefficient of the basis ket |q1 q2 ... qn> where q1
    is the most significant bit of k; for n=2, ``amps[1]`` belongs to |01>.
    The amplitude array is coerced to complex128 and frozen (read-only), so
    instances are safe to share between threads.
    """

    n: int
    amps: np.ndarray

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError("qubit count must be an integer")
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        amps = np.array(self.amps, dtype=np.complex128, copy=True).reshape(-1)
        if amps.shape != (2**self.n,):
            raise ValueError(
                f"expected {2**self.n} amplitudes for n={self.n}, got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        if not np.any(amps != 0):
            raise ValueError("amplitude vector is identically zero")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amps, other.amps)

    def __repr__(self):
        return f"PureState(n={self.n}, norm={state_norm(self):.6g})"


def parse_state(text: str) -> PureState:
    """Parse a state document: {"n": <int>, "amplitudes": [[re, im], ...]}.

    Amplitudes are read verbatim (binary64), ordered by basis index k
    ascending with qubit 1 as the most significant bit of k.  Raises
    StateFormatError on malformed documents, a length that is not a power of
    two, a length/n mismatch, non-finite entries, or an all-zero vector.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"malformed state document: {exc}") from None
    if not isinstance(doc, dict):
        raise StateFormatError("state document must be a JSON object")
    if "n" not in doc or "amplitudes" not in doc:
        raise StateFormatError('state document needs "n" and "amplitudes" fields')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise StateFormatError('"n" must be an integer')
    rows = doc["amplitudes"]
    if not isinstance(rows, list) or not rows:
        raise StateFormatError('"amplitudes" must be a non-empty list')
    length = len(rows)
    if length & (length - 1):
        raise StateFormatError(f"amplitude count {length} is not a power of two")
    if not 1 <= n <= MAX_QUBITS:
        raise StateFormatError(f'"n" must be in 1..{MAX_QUBITS}, got {n}')
    if length != 2**n:
        raise StateFormatError(
            f"amplitude count {length} does not match n={n} (expected {2**n})"
        )
    amps = np.empty(length, dtype=np.complex128)
    for k, row in enumerate(rows):
        if (
            not isinstance(row, list)
            or len(row) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in row)
        ):
            raise StateFormatError(f"amplitude {k} must be a [re, im] pair of numbers")
        re, im = float(row[0]), float(row[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise StateFormatError(f"amplitude {k} is not finite")
        amps[k] = complex(re, im)
    if not np.any(amps != 0):
        raise StateFormatError("amplitude vector is identically zero")
    return PureState(n, amps)


def serialize_state(state: PureState) -> str:
    """Inverse of parse_state; floats are written with shortest round-trip repr."""
    rows = [[z.real, z.imag] for z in state.amps.tolist()]
    return json.dumps({"n": state.n, "amplitudes": rows})


def state_norm(state: PureState) -> float:
    """Euclidean norm sqrt(sum |a_k|^2); used for tolerance scaling."""
    return float(np.linalg.norm(state.amps))
