import numpy as np
import pytest

from sloccinv import (
    Partition,
    PureState,
    SeededGenerator,
    apply_local_ops,
    build_f,
    char_poly,
    dxt_printed,
    f1_3,
    inv_dxt,
    inv_h,
    inv_l,
    inv_m,
    invariant_set,
    random_local_ops,
    random_state,
    relation_residuals,
    tangle3,
)

from conftest import make_state


def test_three_qubit_golden_values(ghz3, w3):
    assert abs(f1_3(ghz3) - 1.0) < 1e-12
    assert abs(tangle3(ghz3) - 1.0) < 1e-12
    assert abs(f1_3(w3)) < 1e-12
    assert tangle3(w3) < 1e-12
    basis = make_state([1, 0, 0, 0, 0, 0, 0, 0])
    assert f1_3(basis) == 0.0


def test_tangle_degree_four_scaling(ghz3):
    doubled = PureState(3, 2 * np.asarray(ghz3.amps))
    assert abs(tangle3(doubled) - 16.0) < 1e-12


def test_four_qubit_golden_values(ghz4, epr_epr):
    zero4 = make_state(np.eye(16)[0])
    assert abs(inv_h(ghz4) - 1.0) < 1e-12
    assert abs(inv_h(epr_epr) - 1.0) < 1e-12
    assert inv_h(zero4) == 0.0
    assert abs(inv_l(ghz4)) < 1e-12
    assert abs(inv_l(epr_epr) - 0.0625) < 1e-12
    assert inv_l(zero4) == 0.0
    assert abs(inv_m(ghz4)) < 1e-12
    assert abs(inv_m(epr_epr)) < 1e-12
    assert inv_m(zero4) == 0.0
    assert abs(inv_dxt(ghz4)) < 1e-12
    assert abs(inv_dxt(epr_epr)) < 1e-12
    assert inv_dxt(zero4) == 0.0
    assert abs(dxt_printed(epr_epr)) < 1e-12


def test_wrong_qubit_count_rejected(ghz3, ghz4):
    with pytest.raises(ValueError, match="3-qubit"):
        f1_3(ghz4)
    with pytest.raises(ValueError, match="4-qubit"):
        inv_h(ghz3)
    with pytest.raises(ValueError):
        invariant_set(make_state([1, 0, 0, 0]))


def test_homogeneity_under_amplitude_scaling():
    gen = SeededGenerator(37)
    for c in (2.0, 1j, 1 + 1j):
        for _ in range(100):
            s3 = random_state(3, gen)
            scaled3 = PureState(3, c * np.asarray(s3.amps))
            base = f1_3(s3)
            assert abs(f1_3(scaled3) - c**4 * base) <= 1e-10 * max(1.0, abs(base))

            s4 = random_state(4, gen)
            scaled4 = PureState(4, c * np.asarray(s4.amps))
            for func, power in ((inv_h, 2), (inv_l, 4), (inv_m, 4), (inv_dxt, 6)):
                base = func(s4)
                assert abs(func(scaled4) - c**power * base) <= 1e-10 * max(1.0, abs(base))


def test_invariance_under_unimodular_ops():
    gen = SeededGenerator(41)
    for _ in range(200):
        s3 = random_state(3, gen)
        moved3 = apply_local_ops(s3, random_local_ops(3, gen))
        base = f1_3(s3)
        assert abs(f1_3(moved3) - base) <= 1e-8 * max(1.0, abs(base))

        s4 = random_state(4, gen)
        moved4 = apply_local_ops(s4, random_local_ops(4, gen))
        for func in (inv_h, inv_l, inv_m, inv_dxt):
            base = func(s4)
            assert abs(func(moved4) - base) <= 1e-8 * max(1.0, abs(base))


def test_relation_residuals_golden(ghz3, ghz4, epr_epr):
    assert relation_residuals(ghz3).tangle_relation < 1e-12
    rep = relation_residuals(ghz4)
    assert rep.max_residual() < 1e-12
    rep = relation_residuals(epr_epr)
    assert rep.max_residual() < 1e-12


def test_relation_residuals_random():
    gen = SeededGenerator(43)
    for _ in range(300):
        s3 = random_state(3, gen)
        assert relation_residuals(s3).tangle_relation < 1e-10
        s4 = random_state(4, gen)
        rep = relation_residuals(s4)
        assert rep.scalar_fmatrix < 1e-10
        assert rep.degree2_charpoly < 1e-10
        assert max(rep.quartic_a3, rep.quartic_a2, rep.quartic_a1, rep.quartic_a0) < 1e-9


def test_relation_residuals_scale_with_norm():
    gen = SeededGenerator(47)
    s = random_state(4, gen)
    big = PureState(4, 3.0 * np.asarray(s.amps))
    assert relation_residuals(big).max_residual() < 1e-9


def test_dxt_two_routes_agree():
    # closed form vs the value implied by the 12|34 fingerprint coefficient
    gen = SeededGenerator(53)
    part = Partition.from_row_block(4, (1, 2))
    for _ in range(300):
        s = random_state(4, gen)
        a1 = char_poly(build_f(s, part)).coeffs[1]
        h, l, m = inv_h(s), inv_l(s), inv_m(s)
        implied = -(a1 + 6 * h * m + h * l) / 4
        assert abs(inv_dxt(s) - implied) < 1e-12


def test_printed_determinant_offset_is_three_halves_hm():
    gen = SeededGenerator(59)
    for _ in range(300):
        s = random_state(4, gen)
        offset = dxt_printed(s) - inv_dxt(s)
        assert abs(offset - 1.5 * inv_h(s) * inv_m(s)) < 1e-13


def test_printed_determinant_alone_fails_the_linear_relation():
    # the unnormalized determinant does not satisfy the a1 identity; this is
    # why inv_dxt carries the -1.5*H*M correction
    gen = SeededGenerator(61)
    part = Partition.from_row_block(4, (1, 2))
    worst = 0.0
    for _ in range(100):
        s = random_state(4, gen)
        a1 = char_poly(build_f(s, part)).coeffs[1]
        h, l, m = inv_h(s), inv_l(s), inv_m(s)
        dev = abs(a1 - (-4 * dxt_printed(s) - 6 * h * m - h * l))
        worst = max(worst, dev)
    assert worst > 1e-3


def test_invariant_set_contents(ghz3, epr_epr):
    inv3 = invariant_set(ghz3)
    assert inv3.n == 3
    assert inv3.h is None
    assert abs(inv3.tangle3 - 1.0) < 1e-12
    inv4 = invariant_set(epr_epr)
    assert inv4.f1_3 is None
    assert abs(inv4.l - 0.0625) < 1e-12
    assert set(inv4.as_dict()) == {"n", "h", "l", "m_inv", "dxt", "dxt_printed"}
