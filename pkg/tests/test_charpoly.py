import numpy as np
import pytest

from sloccinv import (
    CharPoly,
    Partition,
    SeededGenerator,
    build_f,
    canonical_partitions,
    char_poly,
    eval_charpoly,
    random_state,
)
from sloccinv import _backend


def test_identity_matrix():
    cp = char_poly(np.eye(2, dtype=complex))
    assert np.abs(cp.coeffs - np.array([1, -2, 1])).max() == 0.0


def test_ghz3_block(ghz3):
    cp = char_poly(build_f(ghz3, Partition.from_row_block(3, (1,))))
    assert np.abs(cp.coeffs - np.array([-0.25, 0, 1])).max() < 1e-15


def test_ghz4_block(ghz4):
    cp = char_poly(build_f(ghz4, Partition.from_row_block(4, (1,))))
    assert np.abs(cp.coeffs - np.array([0.25, 1, 1])).max() < 1e-15


def test_monic_leading_coefficient_is_exact():
    gen = SeededGenerator(1)
    for n in (3, 4):
        s = random_state(n, gen)
        for p in canonical_partitions(n):
            assert char_poly(build_f(s, p)).coeffs[-1] == 1.0


def test_eval_examples():
    assert eval_charpoly(CharPoly([-0.25, 0, 1]), 0.5) == 0.0
    assert eval_charpoly(CharPoly([1, -2, 1]), 0.0) == 1.0
    assert eval_charpoly(CharPoly([0.25, 1, 1]), -0.5) == 0.0


def test_cayley_hamilton():
    gen = SeededGenerator(8)
    for n, block in ((3, (1,)), (4, (1, 2)), (4, (1, 3))):
        for _ in range(100):
            f = build_f(random_state(n, gen), Partition.from_row_block(n, block)).entries
            coeffs = char_poly(f).coeffs
            m = f.shape[0]
            acc = np.zeros_like(f)
            power = np.eye(m, dtype=complex)
            for j in range(m + 1):
                acc = acc + coeffs[j] * power
                power = power @ f
            scale = max(1.0, np.abs(f).max()) ** m
            assert np.abs(acc).max() < 1e-9 * scale


def test_trace_and_determinant_coefficients():
    gen = SeededGenerator(13)
    for n, block in ((3, (2,)), (4, (1, 4)), (4, (3,))):
        for _ in range(100):
            f = build_f(random_state(n, gen), Partition.from_row_block(n, block)).entries
            coeffs = char_poly(f).coeffs
            m = f.shape[0]
            assert abs(coeffs[m - 1] + np.trace(f)) < 1e-12
            det = _backend.det_lu(f)
            scale = max(1.0, abs(coeffs[0]), abs(det))
            assert abs(coeffs[0] - det) < 1e-10 * scale


def test_against_eigenvalue_route():
    # independent oracle: roots from the eigensolver, expanded back to coefficients
    gen = SeededGenerator(21)
    for n, block in ((6, (1, 2, 3)), (8, (1, 2, 3, 4))):
        f = build_f(random_state(n, gen), Partition.from_row_block(n, block)).entries
        mine = char_poly(f).coeffs
        other = np.poly(np.linalg.eigvals(f))[::-1]
        assert mine.shape == other.shape
        dev = np.abs(mine - other)
        tol = 1e-12 * np.maximum(1.0, np.abs(other))
        assert np.all(dev < np.maximum(tol, 1e-13))


def test_non_square_rejected():
    with pytest.raises(ValueError, match="square"):
        char_poly(np.ones((2, 3), dtype=complex))


def test_non_finite_rejected():
    with pytest.raises(ValueError, match="finite"):
        char_poly(np.array([[np.nan, 0], [0, 1]], dtype=complex))


def test_charpoly_type_validation():
    with pytest.raises(ValueError, match="monic"):
        CharPoly([1.0, 2.0])
    with pytest.raises(ValueError, match="degree"):
        CharPoly([1.0])
    cp = CharPoly([3.0, 2.0, 1.0])
    assert cp.degree == 2
