"""Characteristic polynomials of F matrices: the SLOCC fingerprint entries.

Coefficients are stored lowest degree first and normalized monic, i.e. the
polynomial is det(lambda I - F) with leading coefficient exactly 1.  With
that normalization coeffs[m-1] = -trace(F) and coeffs[0] = (-1)**m det(F),
which is det(F) for every F built here since their dimension 2**i is even.
Each coefficient is a polynomial of degree 2*(m - j) in the amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .fmatrix import FMatrix


@dataclass(frozen=True, eq=False)
class CharPoly:
    """Monic characteristic polynomial, coefficients lowest degree first."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128, copy=True).reshape(-1)
        if c.shape[0] < 2:
            raise ValueError("characteristic polynomial needs degree >= 1")
        if c[-1] != 1.0:
            raise ValueError("coefficients must be monic (last coefficient 1)")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def __repr__(self):
        body = ", ".join(f"{z:.6g}" for z in self.coeffs.tolist())
        return f"CharPoly([{body}])"


def char_poly(f) -> CharPoly:
    """Characteristic polynomial of an FMatrix (or any square complex matrix).

    Computed from the power sums tr(F^k) through Newton's identities;
    no eigenvalue extraction is involved.
    """
    entries = f.entries if isinstance(f, FMatrix) else np.asarray(f, dtype=np.complex128)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(entries.view(np.float64))):
        raise ValueError("matrix entries must be finite")
    return CharPoly(_backend.charpoly_coeffs(entries))


def eval_charpoly(poly: CharPoly, lam: complex) -> complex:
    """Horner evaluation of sum_j coeffs[j] * lam**j."""
    acc = 0.0 + 0.0j
    for c in poly.coeffs[::-1]:
        acc = acc * lam + c
    return complex(acc)
