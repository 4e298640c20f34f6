"""Monte Carlo self-test: reruns every algebraic identity the library rests on.

Each identity gets the maximum scaled residual over the requested number of
random trials plus a pass/fail flag at its own tolerance.  Residual scaling
follows the homogeneity degree of each quantity so the suite also works on
unnormalized states, although the trials here draw unit-norm ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .charpoly import char_poly
from .equivalence import canonical_partitions
from .fmatrix import apply_local_ops, build_f, transform_f
from .invariants import dxt_printed, inv_dxt, relation_residuals
from .partition import Partition
from .sampler import SeededGenerator, random_local_ops, random_state
from .state import PureState

SIMILARITY_TOL = 1e-9
INVARIANCE_TOL = 1e-8
CLOSED_FORM_2X2_TOL = 1e-12
TANGLE_RELATION_TOL = 1e-10
SCALAR_FMATRIX_TOL = 1e-10
DEGREE2_CHARPOLY_TOL = 1e-10
QUARTIC_TOL = 1e-9


@dataclass
class IdentityResult:
    name: str
    max_residual: float
    tol: float

    def __post_init__(self):
        self.max_residual = float(self.max_residual)
        self.tol = float(self.tol)

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol


@dataclass
class SelfTestReport:
    qubits: int
    trials: int
    seed: int
    results: list[IdentityResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {
            "qubits": self.qubits,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.passed,
            "identities": [
                {
                    "name": r.name,
                    "max_residual": r.max_residual,
                    "tol": r.tol,
                    "pass": r.passed,
                }
                for r in self.results
            ],
            "notes": self.notes,
        }


def _closed_form_2x2(state: PureState) -> np.ndarray:
    """Hand-expanded F for the 1|23 block of a 3-qubit state."""
    a = state.amps
    inner = a[0] * a[7] - a[1] * a[6] - a[2] * a[5] + a[3] * a[4]
    return np.array(
        [
            [inner, 2 * (a[4] * a[7] - a[5] * a[6])],
            [-2 * (a[0] * a[3] - a[1] * a[2]), -inner],
        ]
    )


def run_selftest(
    qubits: int, trials: int, seed: int, tol_override: float | None = None
) -> SelfTestReport:
    """Run the identity suite for 3- or 4-qubit states.

    When ``tol_override`` is given it replaces every per-identity tolerance.
    """
    if qubits not in (3, 4):
        raise ValueError("self-test supports qubits=3 or qubits=4")
    if trials < 1:
        raise ValueError("trials must be >= 1")

    report = SelfTestReport(qubits=qubits, trials=trials, seed=seed)
    gen = SeededGenerator(seed)
    partitions = canonical_partitions(qubits)

    similarity = 0.0
    invariance = 0.0
    closed2 = 0.0
    tangle_rel = 0.0
    scalar_f = 0.0
    degree2 = 0.0
    quartic = np.zeros(4)
    printed_dev = 0.0

    for _ in range(trials):
        state = random_state(qubits, gen)
        ops = random_local_ops(qubits, gen)
        moved = apply_local_ops(state, ops)
        op_norm = max(np.linalg.norm(op.matrix, 2) for op in ops)
        sim_scale = op_norm ** (2 * qubits)

        for part in partitions:
            f_before = build_f(state, part)
            f_after = build_f(moved, part)
            row_ops = [ops[q - 1] for q in part.row_block]
            f_law = transform_f(f_before, row_ops)
            similarity = max(
                similarity, np.abs(f_after.entries - f_law.entries).max() / sim_scale
            )
            ca = char_poly(f_before).coeffs
            cb = char_poly(f_after).coeffs
            for j in range(ca.shape[0]):
                dev = abs(ca[j] - cb[j]) / max(1.0, abs(ca[j]), abs(cb[j]))
                invariance = max(invariance, dev)

        if qubits == 3:
            f = build_f(state, Partition.from_row_block(3, (1,)))
            closed2 = max(closed2, np.abs(f.entries - _closed_form_2x2(state)).max())
            tangle_rel = max(tangle_rel, relation_residuals(state).tangle_relation)
        else:
            rep = relation_residuals(state)
            scalar_f = max(scalar_f, rep.scalar_fmatrix)
            degree2 = max(degree2, rep.degree2_charpoly)
            quartic = np.maximum(
                quartic, [rep.quartic_a3, rep.quartic_a2, rep.quartic_a1, rep.quartic_a0]
            )
            printed_dev = max(printed_dev, abs(dxt_printed(state) - inv_dxt(state)))

    def tol(default: float) -> float:
        return tol_override if tol_override is not None else default

    report.results.append(IdentityResult("similarity_law", similarity, tol(SIMILARITY_TOL)))
    report.results.append(IdentityResult("charpoly_invariance", invariance, tol(INVARIANCE_TOL)))
    if qubits == 3:
        report.results.append(
            IdentityResult("closed_form_2x2", closed2, tol(CLOSED_FORM_2X2_TOL))
        )
        report.results.append(
            IdentityResult("tangle_relation", tangle_rel, tol(TANGLE_RELATION_TOL))
        )
    else:
        report.results.append(
            IdentityResult("scalar_fmatrix", scalar_f, tol(SCALAR_FMATRIX_TOL))
        )
        report.results.append(
            IdentityResult("degree2_charpoly", degree2, tol(DEGREE2_CHARPOLY_TOL))
        )
        for name, val in zip(
            ("quartic_a3", "quartic_a2", "quartic_a1", "quartic_a0"), quartic
        ):
            report.results.append(IdentityResult(name, float(val), tol(QUARTIC_TOL)))
        report.notes.append(
            "unnormalized degree-6 determinant differs from D by up to "
            f"{printed_dev:.3e} over this sample (D = printed - 1.5*H*M; expected, "
            "see README)"
        )
    return report
