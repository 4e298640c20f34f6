# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: coefficient-matrix reshuffle, F-matrix build,
characteristic polynomial via power sums, local-operator application,
and an LU determinant.  Same contracts as sloccinv._kernels_py."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef double complex cplx


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void _fill_offsets(long long[::1] off, int n, const int[::1] block) noexcept nogil:
    cdef int size = 1 << block.shape[0]
    cdef int width = block.shape[0]
    cdef int idx, pos, bit
    for idx in range(size):
        off[idx] = 0
        for pos in range(width):
            bit = (idx >> (width - 1 - pos)) & 1
            if bit:
                off[idx] |= (<long long>1) << (n - block[pos])


def coeff_matrix(amps, int n, row_block):
    """Reshape packed amplitudes into the 2**i x 2**(n-i) block matrix."""
    cdef const cplx[::1] a = np.ascontiguousarray(amps, dtype=np.complex128)
    cdef const int[::1] rb = np.ascontiguousarray(row_block, dtype=np.intc)
    cdef int i = rb.shape[0]
    cdef int d = 1 << i
    cdef int e = 1 << (n - i)
    cdef int q, pos, r, c
    col_arr = np.empty(n - i, dtype=np.intc)
    cdef int[::1] cb = col_arr
    pos = 0
    for q in range(1, n + 1):
        for r in range(i):
            if rb[r] == q:
                break
        else:
            cb[pos] = q
            pos += 1
    ro_arr = np.empty(d, dtype=np.int64)
    co_arr = np.empty(e, dtype=np.int64)
    cdef long long[::1] ro = ro_arr
    cdef long long[::1] co = co_arr
    out = np.empty((d, e), dtype=np.complex128)
    cdef cplx[:, ::1] m = out
    with nogil:
        _fill_offsets(ro, n, rb)
        _fill_offsets(co, n, cb)
        for r in range(d):
            for c in range(e):
                m[r, c] = a[ro[r] | co[c]]
    return out


def build_fmatrix(amps, int n, row_block):
    """Square matrix V_i C V_(n-i) C^T; V factors applied as signed flips."""
    cdef int i = len(row_block)
    cdef int d = 1 << i
    cdef int e = 1 << (n - i)
    c_arr = coeff_matrix(amps, n, row_block)
    cdef cplx[:, ::1] c = c_arr
    mid_arr = np.empty((d, e), dtype=np.complex128)
    ecv_arr = np.empty((d, d), dtype=np.complex128)
    out = np.empty((d, d), dtype=np.complex128)
    cdef cplx[:, ::1] mid = mid_arr
    cdef cplx[:, ::1] ecv = ecv_arr
    cdef cplx[:, ::1] f = out
    cdef int r, s, k
    cdef cplx acc
    with nogil:
        # mid[r, k] = C[r, e-1-k] * (-1)**popcount(e-1-k)
        for r in range(d):
            for k in range(e):
                if _popcount(<unsigned long long>(e - 1 - k)) & 1:
                    mid[r, k] = -c[r, e - 1 - k]
                else:
                    mid[r, k] = c[r, e - 1 - k]
        # ecv = mid @ C^T
        for r in range(d):
            for s in range(d):
                acc = 0
                for k in range(e):
                    acc = acc + mid[r, k] * c[s, k]
                ecv[r, s] = acc
        # f[r, :] = (-1)**popcount(r) * ecv[d-1-r, :]
        for r in range(d):
            if _popcount(<unsigned long long>r) & 1:
                for s in range(d):
                    f[r, s] = -ecv[d - 1 - r, s]
            else:
                for s in range(d):
                    f[r, s] = ecv[d - 1 - r, s]
    return out


def charpoly_coeffs(fmat):
    """Monic characteristic polynomial det(lambda I - F), lowest degree first.

    Power sums tr(F^k) feed Newton's identities.
    """
    f_arr = np.ascontiguousarray(fmat, dtype=np.complex128)
    if f_arr.ndim != 2 or f_arr.shape[0] != f_arr.shape[1]:
        raise ValueError("matrix must be square")
    cdef const cplx[:, ::1] f = f_arr
    cdef Py_ssize_t m = f.shape[0]
    pk_arr = np.eye(m, dtype=np.complex128)
    tmp_arr = np.empty((m, m), dtype=np.complex128)
    p_arr = np.zeros(m + 1, dtype=np.complex128)
    e_arr = np.zeros(m + 1, dtype=np.complex128)
    out = np.empty(m + 1, dtype=np.complex128)
    cdef cplx[:, ::1] pk = pk_arr
    cdef cplx[:, ::1] tmp = tmp_arr
    cdef cplx[::1] p = p_arr
    cdef cplx[::1] e = e_arr
    cdef cplx[::1] coeffs = out
    cdef Py_ssize_t k, r, s, t, j
    cdef cplx acc
    cdef double sign
    with nogil:
        for k in range(1, m + 1):
            for r in range(m):
                for s in range(m):
                    acc = 0
                    for t in range(m):
                        acc = acc + pk[r, t] * f[t, s]
                    tmp[r, s] = acc
            acc = 0
            for r in range(m):
                for s in range(m):
                    pk[r, s] = tmp[r, s]
                acc = acc + pk[r, r]
            p[k] = acc
        e[0] = 1
        for k in range(1, m + 1):
            acc = 0
            sign = 1.0
            for j in range(1, k + 1):
                acc = acc + sign * e[k - j] * p[j]
                sign = -sign
            e[k] = acc / <double>k
        for j in range(m + 1):
            if (m - j) % 2 == 0:
                coeffs[j] = e[m - j]
            else:
                coeffs[j] = -e[m - j]
        coeffs[m] = 1
    return out


def apply_local_ops(amps, int n, ops):
    """Amplitudes of (A_1 x ... x A_n) |psi>; ops has shape (n, 2, 2)."""
    out = np.array(amps, dtype=np.complex128, copy=True)
    cdef cplx[::1] x = out
    cdef const cplx[:, :, ::1] a = np.ascontiguousarray(ops, dtype=np.complex128)
    cdef Py_ssize_t size = x.shape[0]
    cdef Py_ssize_t q, stride, base, t
    cdef cplx a00, a01, a10, a11, x0, x1
    with nogil:
        for q in range(n):
            stride = (<Py_ssize_t>1) << (n - 1 - q)
            a00 = a[q, 0, 0]
            a01 = a[q, 0, 1]
            a10 = a[q, 1, 0]
            a11 = a[q, 1, 1]
            base = 0
            while base < size:
                for t in range(base, base + stride):
                    x0 = x[t]
                    x1 = x[t + stride]
                    x[t] = a00 * x0 + a01 * x1
                    x[t + stride] = a10 * x0 + a11 * x1
                base += 2 * stride
    return out


def det_lu(fmat):
    """Determinant via in-place LU with partial pivoting."""
    work = np.array(fmat, dtype=np.complex128, copy=True, order="C")
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError("matrix must be square")
    cdef cplx[:, ::1] w = work
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t col, r, s, piv
    cdef double best, mag
    cdef cplx det = 1
    cdef cplx factor, tmp
    with nogil:
        for col in range(m):
            piv = col
            best = w[col, col].real * w[col, col].real + w[col, col].imag * w[col, col].imag
            for r in range(col + 1, m):
                mag = w[r, col].real * w[r, col].real + w[r, col].imag * w[r, col].imag
                if mag > best:
                    best = mag
                    piv = r
            if best == 0.0:
                det = 0
                break
            if piv != col:
                for s in range(m):
                    tmp = w[col, s]
                    w[col, s] = w[piv, s]
                    w[piv, s] = tmp
                det = -det
            det = det * w[col, col]
            for r in range(col + 1, m):
                factor = w[r, col] / w[col, col]
                for s in range(col + 1, m):
                    w[r, s] = w[r, s] - factor * w[col, s]
    return complex(det)
