"""SLOCC-inequivalence testing through characteristic-polynomial fingerprints.

A fingerprint maps each canonical bipartition to the monic characteristic
polynomial of the state's F matrix.  Matching fingerprints are a necessary
condition for SLOCC equivalence, never a proof of it, so the verdicts are
"inequivalent" (with a witness coefficient) and "indistinguishable".

Strict mode compares coefficients directly and is the right test when both
states are related by determinant-1 operators.  Projective mode quotients
out the scale freedom of general invertible local operators M_k = c_k A_k:
those multiply every degree-m fingerprint's coefficient a_j by s**(m-j) for
one state-wide scalar s, so the test checks zero patterns, within-partition
cross ratios a_j**(m-k) b_k**(m-j) = b_j**(m-k) a_k**(m-j), and consistency
of the implied scalar across partitions, all without extracting roots.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .charpoly import CharPoly, char_poly
from .fmatrix import build_f
from .partition import Partition
from .state import PureState

INEQUIVALENT = "inequivalent"
INDISTINGUISHABLE = "indistinguishable"

DEFAULT_TOL = 1e-9


@functools.lru_cache(maxsize=None)
def canonical_partitions(n: int) -> tuple[Partition, ...]:
    """The fixed partition set fingerprints are built over.

    n=3 and n=4 use the standard sets {1|23, 2|13, 3|12} and
    {1|234, 2|134, 3|124, 12|34, 13|24, 14|23}.  Other n take every
    ascending row block of size up to floor(n/2); at size exactly n/2 only
    blocks containing qubit 1 are kept, dropping complements as redundant.
    """
    if n == 3:
        blocks = [(1,), (2,), (3,)]
    elif n == 4:
        blocks = [(1,), (2,), (3,), (1, 2), (1, 3), (1, 4)]
    else:
        blocks = []
        for size in range(1, n // 2 + 1):
            for combo in itertools.combinations(range(1, n + 1), size):
                if 2 * size == n and combo[0] != 1:
                    continue
                blocks.append(combo)
    return tuple(Partition.from_row_block(n, block) for block in blocks)


@dataclass(frozen=True, eq=False)
class Fingerprint:
    """Map from canonical partition label to CharPoly, in canonical order."""

    n: int
    entries: dict[str, CharPoly]


@dataclass(frozen=True)
class Witness:
    """Location of the first fingerprint mismatch."""

    partition: str
    coeff_index: int
    detail: str


@dataclass(frozen=True)
class Verdict:
    outcome: str
    mode: str
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.outcome == INEQUIVALENT and self.witness is None:
            raise ValueError("an inequivalent verdict requires a witness")


def fingerprint(state: PureState) -> Fingerprint:
    """Characteristic polynomials of the state over all canonical partitions."""
    entries = {
        p.label: char_poly(build_f(state, p)) for p in canonical_partitions(state.n)
    }
    return Fingerprint(state.n, entries)


def _check_comparable(a: Fingerprint, b: Fingerprint):
    if a.n != b.n:
        raise ValueError(f"cannot compare fingerprints for n={a.n} and n={b.n}")
    if list(a.entries) != list(b.entries):
        raise ValueError("fingerprints cover different partition sets")


def compare_strict(a: Fingerprint, b: Fingerprint, tol: float = DEFAULT_TOL) -> Verdict:
    """Coefficientwise comparison; valid under determinant-1 operations.

    Inequivalent iff some coefficient pair differs by more than
    tol * max(1, |a_j|, |b_j|).
    """
    _check_comparable(a, b)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    for label, pa in a.entries.items():
        pb = b.entries[label]
        for j in range(pa.coeffs.shape[0]):
            ca, cb = pa.coeffs[j], pb.coeffs[j]
            if abs(ca - cb) > tol * max(1.0, abs(ca), abs(cb)):
                return Verdict(
                    INEQUIVALENT,
                    "strict",
                    Witness(label, j, f"coefficient {j}: {ca:.9g} vs {cb:.9g}"),
                )
    return Verdict(INDISTINGUISHABLE, "strict", None)


def _weight_scale(coeffs: np.ndarray) -> float:
    """max over non-leading j of |c_j|**(1/(m-j)): the per-weight magnitude
    scale of a fingerprint polynomial (0 when all such coefficients vanish)."""
    m = coeffs.shape[0] - 1
    best = 0.0
    for j in range(m):
        mag = abs(coeffs[j]) ** (1.0 / (m - j))
        if mag > best:
            best = mag
    return best


def compare_projective(a: Fingerprint, b: Fingerprint, tol: float = DEFAULT_TOL) -> Verdict:
    """Comparison modulo the coefficient rescaling a_j -> s**(m-j) a_j.

    Checks (per partition) matching zero patterns and all cross-ratio
    identities between nonzero coefficients, then (across partitions)
    consistency of the implied scalar through cross-ratio products of the
    best-conditioned nonzero coefficient ratios.  Any violation yields an
    inequivalent verdict with the offending coefficient as witness.
    """
    _check_comparable(a, b)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    refs = []  # (label, index, ratio, weight) per partition with a nonzero entry
    for label, pa in a.entries.items():
        pb = b.entries[label]
        ca, cb = pa.coeffs, pb.coeffs
        m = ca.shape[0] - 1
        sa, sb = _weight_scale(ca), _weight_scale(cb)
        za = [abs(ca[j]) <= tol * sa ** (m - j) for j in range(m)]
        zb = [abs(cb[j]) <= tol * sb ** (m - j) for j in range(m)]
        for j in range(m):
            if za[j] != zb[j]:
                return Verdict(
                    INEQUIVALENT,
                    "projective",
                    Witness(label, j, f"zero-pattern mismatch at coefficient {j}"),
                )
        nz = [j for j in range(m) if not za[j]]
        if not nz:
            continue
        # rescale by the per-weight magnitudes: for genuinely related
        # fingerprints the rescaled scalar has modulus ~1, so the power
        # products below stay perfectly conditioned.
        ta = [ca[j] / sa ** (m - j) for j in range(m)]
        tb = [cb[j] / sb ** (m - j) for j in range(m)]
        for j, k in itertools.combinations(nz, 2):
            wj, wk = m - j, m - k
            lhs = ta[j] ** wk * tb[k] ** wj
            rhs = tb[j] ** wk * ta[k] ** wj
            if abs(lhs - rhs) > tol * max(1.0, abs(lhs), abs(rhs)):
                return Verdict(
                    INEQUIVALENT,
                    "projective",
                    Witness(label, j, f"cross-ratio mismatch between coefficients {j} and {k}"),
                )
        # best-conditioned reference: the coefficient that defines the scale
        jref = max(nz, key=lambda j: abs(ca[j]) ** (1.0 / (m - j)))
        refs.append((label, jref, cb[jref] / ca[jref], m - jref))

    if len(refs) >= 2:
        label0, j0, r0, w0 = refs[0]
        for label, j, r, w in refs[1:]:
            lhs = r0**w
            rhs = r**w0
            if abs(lhs - rhs) > tol * max(abs(lhs), abs(rhs), 1e-300):
                return Verdict(
                    INEQUIVALENT,
                    "projective",
                    Witness(
                        label,
                        j,
                        f"scale factor inconsistent between partitions {label0} and {label}",
                    ),
                )
    return Verdict(INDISTINGUISHABLE, "projective", None)
