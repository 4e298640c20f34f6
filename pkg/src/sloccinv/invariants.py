"""Closed-form SLOCC invariants for three and four qubits.

Three qubits carry one algebraically independent invariant here (a degree-4
polynomial whose modulus is the 3-tangle); four qubits carry the classical
quadruple H, L, M, D of degrees 2, 4, 4, 6.  relation_residuals cross-checks
every closed form against the characteristic polynomials of the state's F
matrices:

    n=3, block 1|23:   coeffs = [-f1_3/4, 0, 1]
    n=4, block 1|234:  F = -(H/2) * I, coeffs = [H^2/4, H, 1]
    n=4, block 12|34:  a3 = -H,  a2 = H^2/4 + 2(L + 2M),
                       a1 = -4D - 6HM - HL,  a0 = L^2

On the degree-6 invariant: the 3x3 determinant of quadratic forms assembled
by dxt_printed (first row, sum of the two middle rows, last row of the
four-row table of pair quadratics) does NOT satisfy the a1 relation above;
no selection of three of the four printed rows does.  Numerically the exact
identity is a1 = -4*dxt_printed - H*L, so the normalization

    D = dxt_printed - (3/2) * H * M

is the unique degree-6 combination compatible with the a1 relation, and
inv_dxt returns it.  Both quantities are exposed; relation_residuals and the
self-test report the discrepancy of the unnormalized determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .charpoly import char_poly
from .fmatrix import build_f
from .partition import Partition
from .state import PureState, state_norm


def _require_n(state: PureState, n: int, what: str):
    if state.n != n:
        raise ValueError(f"{what} is defined for {n}-qubit states, got n={state.n}")


def f1_3(state: PureState) -> complex:
    """Degree-4 invariant of a 3-qubit state; its modulus is the 3-tangle.

    4*[(a0 a7 - a1 a6 - a2 a5 + a3 a4)^2 + 4 (a0 a3 - a1 a2)(a5 a6 - a4 a7)].
    """
    _require_n(state, 3, "f1_3")
    a = state.amps
    inner = a[0] * a[7] - a[1] * a[6] - a[2] * a[5] + a[3] * a[4]
    return complex(4 * (inner**2 + 4 * (a[0] * a[3] - a[1] * a[2]) * (a[5] * a[6] - a[4] * a[7])))


def tangle3(state: PureState) -> float:
    """3-tangle (residual three-party entanglement), |f1_3|."""
    _require_n(state, 3, "tangle3")
    return abs(f1_3(state))


def inv_h(state: PureState) -> complex:
    """Degree-2 invariant H of a 4-qubit state (each term pairs k with 15-k)."""
    _require_n(state, 4, "H")
    a = state.amps
    return complex(
        2
        * (
            a[0] * a[15]
            - a[1] * a[14]
            - a[2] * a[13]
            + a[3] * a[12]
            - a[4] * a[11]
            + a[5] * a[10]
            + a[6] * a[9]
            - a[7] * a[8]
        )
    )


def inv_l(state: PureState) -> complex:
    """Degree-4 invariant L: determinant of the amplitude grid with column
    index on qubits (1,2) and row index on qubits (3,4)."""
    _require_n(state, 4, "L")
    a = state.amps
    grid = np.array(
        [
            [a[0], a[4], a[8], a[12]],
            [a[1], a[5], a[9], a[13]],
            [a[2], a[6], a[10], a[14]],
            [a[3], a[7], a[11], a[15]],
        ]
    )
    return complex(np.linalg.det(grid))


def inv_m(state: PureState) -> complex:
    """Degree-4 invariant M: determinant of the amplitude grid with column
    index on qubits (1,3) and row index on qubits (2,4)."""
    _require_n(state, 4, "M")
    a = state.amps
    grid = np.array(
        [
            [a[0], a[8], a[2], a[10]],
            [a[1], a[9], a[3], a[11]],
            [a[4], a[12], a[6], a[14]],
            [a[5], a[13], a[7], a[15]],
        ]
    )
    return complex(np.linalg.det(grid))


def _dxt_quadratic_rows(a: np.ndarray):
    """The four printed rows of pair quadratics feeding the degree-6 determinant."""
    r1 = np.array(
        [
            a[0] * a[6] - a[2] * a[4],
            a[0] * a[7] + a[1] * a[6] - a[2] * a[5] - a[3] * a[4],
            a[1] * a[7] - a[3] * a[5],
        ]
    )
    r2 = np.array(
        [
            a[0] * a[14] + a[6] * a[8],
            a[0] * a[15] + a[6] * a[9] + a[1] * a[14] + a[7] * a[8],
            a[1] * a[15] + a[7] * a[9],
        ]
    )
    r3 = np.array(
        [
            -a[2] * a[12] - a[4] * a[10],
            -a[2] * a[13] - a[3] * a[12] - a[4] * a[11] - a[5] * a[10],
            -a[3] * a[13] - a[5] * a[11],
        ]
    )
    r4 = np.array(
        [
            a[8] * a[14] - a[10] * a[12],
            a[8] * a[15] + a[9] * a[14] - a[10] * a[13] - a[11] * a[12],
            a[9] * a[15] - a[11] * a[13],
        ]
    )
    return r1, r2, r3, r4


def dxt_printed(state: PureState) -> complex:
    """Determinant of the 3x3 quadratic-form matrix [row1; row2+row3; row4].

    This is the verbatim merged reading of the four-row quadratic table.  It
    is itself SLOCC-invariant but differs from inv_dxt by (3/2)*H*M; see the
    module docstring.
    """
    _require_n(state, 4, "dxt_printed")
    r1, r2, r3, r4 = _dxt_quadratic_rows(state.amps)
    return complex(np.linalg.det(np.array([r1, r2 + r3, r4])))


def inv_dxt(state: PureState) -> complex:
    """Degree-6 invariant D, normalized so that the lambda^1 coefficient of
    the 12|34 fingerprint equals -4*D - 6*H*M - H*L.

    Equals dxt_printed - (3/2)*H*M, which is algebraically identical to
    -(a1 + 6*H*M + H*L)/4 with a1 taken from char_poly(build_f(s, 12|34));
    the test suite pins the two routes against each other.
    """
    _require_n(state, 4, "D")
    return complex(dxt_printed(state) - 1.5 * inv_h(state) * inv_m(state))


@dataclass(frozen=True)
class InvariantSet:
    """Closed-form invariants of a state; fields not applicable to its qubit
    count are None."""

    n: int
    f1_3: Optional[complex] = None
    tangle3: Optional[float] = None
    h: Optional[complex] = None
    l: Optional[complex] = None
    m_inv: Optional[complex] = None
    dxt: Optional[complex] = None
    dxt_printed: Optional[complex] = None

    def as_dict(self) -> dict:
        out = {"n": self.n}
        for key in ("f1_3", "tangle3", "h", "l", "m_inv", "dxt", "dxt_printed"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def invariant_set(state: PureState) -> InvariantSet:
    """All closed-form invariants applicable to the state's qubit count."""
    if state.n == 3:
        val = f1_3(state)
        return InvariantSet(n=3, f1_3=val, tangle3=abs(val))
    if state.n == 4:
        return InvariantSet(
            n=4,
            h=inv_h(state),
            l=inv_l(state),
            m_inv=inv_m(state),
            dxt=inv_dxt(state),
            dxt_printed=dxt_printed(state),
        )
    raise ValueError(f"closed-form invariants cover n=3 and n=4 only, got n={state.n}")


@dataclass(frozen=True)
class RelationResidualReport:
    """Scaled absolute deviations of the fingerprint/closed-form identities.

    Each residual is |deviation| / max(1, norm**degree) with degree the
    homogeneity weight of the identity, so values stay meaningful for
    unnormalized states.  Fields that do not apply to the state's qubit
    count are None.
    """

    n: int
    tangle_relation: Optional[float] = None
    scalar_fmatrix: Optional[float] = None
    degree2_charpoly: Optional[float] = None
    quartic_a3: Optional[float] = None
    quartic_a2: Optional[float] = None
    quartic_a1: Optional[float] = None
    quartic_a0: Optional[float] = None

    _FIELDS = (
        "tangle_relation",
        "scalar_fmatrix",
        "degree2_charpoly",
        "quartic_a3",
        "quartic_a2",
        "quartic_a1",
        "quartic_a0",
    )

    def as_dict(self) -> dict:
        out = {}
        for key in self._FIELDS:
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    def max_residual(self) -> float:
        vals = [v for v in self.as_dict().values()]
        return max(vals) if vals else 0.0


def relation_residuals(state: PureState) -> RelationResidualReport:
    """Check every identity linking closed forms to fingerprint coefficients.

    For n=3 the single check is the constant coefficient of the 1|23
    fingerprint against -f1_3/4.  For n=4: the 1|234 F matrix against
    -(H/2)*I, its quadratic fingerprint against [H^2/4, H, 1], and the four
    12|34 coefficient relations listed in the module docstring.
    """
    nrm = state_norm(state)

    def scaled(dev: float, degree: int) -> float:
        return float(dev) / max(1.0, nrm**degree)

    if state.n == 3:
        part = Partition.from_row_block(3, (1,))
        coeffs = char_poly(build_f(state, part)).coeffs
        dev = abs(coeffs[0] + f1_3(state) / 4)
        return RelationResidualReport(n=3, tangle_relation=scaled(dev, 4))

    if state.n == 4:
        h = inv_h(state)
        l = inv_l(state)
        m = inv_m(state)
        d = inv_dxt(state)

        f1 = build_f(state, Partition.from_row_block(4, (1,)))
        dev_scalar = np.abs(f1.entries - (-h / 2) * np.eye(2)).max()
        c1 = char_poly(f1).coeffs
        dev_deg2 = max(scaled(abs(c1[0] - h * h / 4), 4), scaled(abs(c1[1] - h), 2))

        c12 = char_poly(build_f(state, Partition.from_row_block(4, (1, 2)))).coeffs
        return RelationResidualReport(
            n=4,
            scalar_fmatrix=scaled(dev_scalar, 2),
            degree2_charpoly=dev_deg2,
            quartic_a3=scaled(abs(c12[3] + h), 2),
            quartic_a2=scaled(abs(c12[2] - (h * h / 4 + 2 * (l + 2 * m))), 4),
            quartic_a1=scaled(abs(c12[1] - (-4 * d - 6 * h * m - h * l)), 6),
            quartic_a0=scaled(abs(c12[0] - l * l), 8),
        )

    raise ValueError(f"relation residuals cover n=3 and n=4 only, got n={state.n}")
