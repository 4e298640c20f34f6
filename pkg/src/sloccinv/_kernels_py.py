"""Numpy implementations of the hot kernels.

Mirrors the compiled extension ``sloccinv._core`` function for function;
``sloccinv._backend`` picks whichever is available.  All functions take and
return plain complex128 arrays, with the packed-amplitude convention that
index k of a length-2**n vector carries qubit q in bit (n - q) (qubit 1 is
the most significant bit).
"""

import numpy as np


def _block_offsets(n: int, block) -> np.ndarray:
    """Amplitude-index offset contributed by each value of a block index.

    The first qubit listed in ``block`` is the most significant bit of the
    block index.
    """
    size = 1 << len(block)
    idx = np.arange(size, dtype=np.int64)
    off = np.zeros(size, dtype=np.int64)
    for pos, q in enumerate(block):
        bit = (idx >> (len(block) - 1 - pos)) & 1
        off |= bit << (n - q)
    return off


def _alt_signs(k: int) -> np.ndarray:
    """(-1)**popcount(j) for j in 0..2**k-1."""
    counts = np.bitwise_count(np.arange(1 << k, dtype=np.uint64)).astype(np.int64)
    return np.where(counts & 1, -1.0, 1.0)


def coeff_matrix(amps: np.ndarray, n: int, row_block) -> np.ndarray:
    """Reshape a packed amplitude vector into the 2**i x 2**(n-i) block matrix.

    Row bits come from ``row_block`` in the order given; column bits from the
    complement in ascending qubit order.
    """
    row_block = [int(q) for q in row_block]
    col_block = [q for q in range(1, n + 1) if q not in row_block]
    ro = _block_offsets(n, row_block)
    co = _block_offsets(n, col_block)
    return np.ascontiguousarray(amps[ro[:, None] | co[None, :]])


def build_fmatrix(amps: np.ndarray, n: int, row_block) -> np.ndarray:
    """Square matrix V_i C V_(n-i) C^T for the given row block.

    V_k is the k-fold Kronecker power of [[0,1],[-1,0]], an anti-diagonal
    signed permutation, so both V factors are applied as index flips with
    signs; the only dense product is C V C^T.
    """
    i = len(row_block)
    c = coeff_matrix(amps, n, row_block)
    # rows of V_k: V_k[r, size-1-r] = (-1)**popcount(r)
    mid = c[:, ::-1] * _alt_signs(n - i)[::-1]
    e = mid @ c.T
    return np.ascontiguousarray(_alt_signs(i)[:, None] * e[::-1, :])


def charpoly_coeffs(f: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial det(lambda I - F), lowest degree first.

    Power sums p_k = tr(F^k) are converted to elementary symmetric functions
    through Newton's identities; exact in exact arithmetic.
    """
    f = np.asarray(f, dtype=np.complex128)
    m = f.shape[0]
    if f.ndim != 2 or f.shape[1] != m:
        raise ValueError("matrix must be square")
    p = np.zeros(m + 1, dtype=np.complex128)
    pk = np.eye(m, dtype=np.complex128)
    for k in range(1, m + 1):
        pk = pk @ f
        p[k] = np.trace(pk)
    e = np.zeros(m + 1, dtype=np.complex128)
    e[0] = 1.0
    for k in range(1, m + 1):
        acc = 0.0 + 0.0j
        sign = 1.0
        for j in range(1, k + 1):
            acc += sign * e[k - j] * p[j]
            sign = -sign
        e[k] = acc / k
    coeffs = np.empty(m + 1, dtype=np.complex128)
    for j in range(m + 1):
        coeffs[j] = e[m - j] if ((m - j) % 2 == 0) else -e[m - j]
    coeffs[m] = 1.0
    return coeffs


def apply_local_ops(amps: np.ndarray, n: int, ops: np.ndarray) -> np.ndarray:
    """Amplitudes of (A_1 x A_2 x ... x A_n) |psi>; ops has shape (n, 2, 2)."""
    psi = np.asarray(amps, dtype=np.complex128).reshape([2] * n)
    for q in range(n):
        psi = np.moveaxis(np.tensordot(ops[q], psi, axes=([1], [q])), 0, q)
    return np.ascontiguousarray(psi.reshape(-1))


def det_lu(f: np.ndarray) -> complex:
    """Determinant via LU with partial pivoting (LAPACK through numpy)."""
    f = np.asarray(f, dtype=np.complex128)
    if f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ValueError("matrix must be square")
    return complex(np.linalg.det(f))
