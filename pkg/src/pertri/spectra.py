"""Largest eigenvalues of Hermitian tridiagonal pencils.

The fast path phase-scales the off-diagonal to nonnegative reals (a
diagonal unitary similarity) and bisects on the Sturm count.  Pencils with
a nonzero corner, and every oracle comparison, go through a cyclic Jacobi
eigensolver applied to the real symmetric embedding
``[[Re H, -Im H], [Im H, Re H]]``, whose spectrum is that of ``H`` with each
eigenvalue doubled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import InputError, ShapeError

EPS = np.finfo(float).eps
DEFAULT_TOL = 1e-12
JACOBI_RTOL = 1e-13


@dataclass(frozen=True)
class HermitianTridiagCorner:
    """Hermitian matrix given by its diagonal, upper off-diagonal and the
    (1, m) corner; the lower triangle is implied by conjugation."""

    diag: np.ndarray
    off: np.ndarray
    corner: complex = 0j

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.off, dtype=complex)
        if diag.ndim != 1 or len(diag) < 1:
            raise InputError("pencil needs at least one diagonal entry")
        if len(off) != len(diag) - 1:
            raise InputError("off-diagonal must have length m-1")
        if len(diag) < 3 and self.corner != 0:
            raise InputError("corner entries need m >= 3")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "off", off)
        object.__setattr__(self, "corner", complex(self.corner))

    @property
    def size(self) -> int:
        return len(self.diag)

    def inf_norm(self) -> float:
        m = self.size
        rows = np.abs(self.diag).copy()
        a = np.abs(self.off)
        rows[:-1] += a
        rows[1:] += a
        if self.corner != 0:
            rows[0] += abs(self.corner)
            rows[m - 1] += abs(self.corner)
        return float(rows.max())

    def gershgorin(self) -> tuple[float, float]:
        m = self.size
        radius = np.zeros(m)
        a = np.abs(self.off)
        radius[:-1] += a
        radius[1:] += a
        if self.corner != 0:
            radius[0] += abs(self.corner)
            radius[m - 1] += abs(self.corner)
        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))

    def to_dense(self) -> np.ndarray:
        m = self.size
        H = np.diag(self.diag).astype(complex)
        idx = np.arange(m - 1)
        H[idx, idx + 1] = self.off
        H[idx + 1, idx] = np.conj(self.off)
        if self.corner != 0:
            H[0, m - 1] = self.corner
            H[m - 1, 0] = np.conj(self.corner)
        return H


def _check_band(M: np.ndarray) -> None:
    m = M.shape[0]
    mask = np.ones((m, m), dtype=bool)
    idx = np.arange(m)
    mask[idx, idx] = False
    mask[idx[:-1], idx[:-1] + 1] = False
    mask[idx[:-1] + 1, idx[:-1]] = False
    if m >= 3:
        mask[0, m - 1] = mask[m - 1, 0] = False
    if np.any(M[mask] != 0):
        raise ShapeError("matrix is not tridiagonal apart from the corner pair")


def real_part_pencil(M, theta: float) -> HermitianTridiagCorner:
    """Hermitian part of ``exp(-i theta) M`` for a tridiagonal(+corner) M."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ShapeError("pencil needs a nonempty square matrix")
    _check_band(M)
    m = M.shape[0]
    R = np.exp(-1j * theta) * M
    diag = R.diagonal().real.copy()
    idx = np.arange(m - 1)
    off = (R[idx, idx + 1] + np.conj(R[idx + 1, idx])) / 2.0
    corner = 0j
    if m >= 3:
        corner = (R[0, m - 1] + np.conj(R[m - 1, 0])) / 2.0
    return HermitianTridiagCorner(diag, off, corner)


def phase_reduce(H: HermitianTridiagCorner) -> HermitianTridiagCorner:
    """Real symmetric pencil with the same spectrum (corner-free pencils only)."""
    if H.corner != 0:
        raise ShapeError("phase reduction needs a corner-free pencil")
    return HermitianTridiagCorner(H.diag, np.abs(H.off))


def sturm_count(H: HermitianTridiagCorner, x: float) -> int:
    """Number of eigenvalues strictly below ``x`` (corner-free pencils)."""
    if H.corner != 0:
        raise ShapeError("Sturm counts need a corner-free pencil")
    return _sturm_count(H.diag.tolist(), (np.abs(H.off) ** 2).tolist(), x, _pivmin(H))


def _pivmin(H: HermitianTridiagCorner) -> float:
    return EPS * max(1.0, H.inf_norm())


def _sturm_count(diag, offsq, x, pivmin):
    count = 0
    q = diag[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0:
        count += 1
    for k in range(1, len(diag)):
        q = diag[k] - x - offsq[k - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
    return count


def lambda_max(H: HermitianTridiagCorner, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a Hermitian tridiagonal(+corner) pencil."""
    if tol <= 0:
        raise InputError("tol must be positive")
    m = H.size
    if m == 1:
        return float(H.diag[0])
    if H.corner != 0:
        return dense_eigen_max(H.to_dense())
    lo, hi = H.gershgorin()
    scale = max(1.0, H.inf_norm())
    width = min(tol, 1e-13 * scale)
    diag = H.diag.tolist()
    offsq = (np.abs(H.off) ** 2).tolist()
    pivmin = EPS * scale
    if _sturm_count(diag, offsq, hi, pivmin) < m:
        return hi + 0.0
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _sturm_count(diag, offsq, mid, pivmin) == m:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi) + 0.0


# -- dense oracle ---------------------------------------------------------------


@numba.njit(cache=True)
def _jacobi_diagonalise(A, rtol):
    """Cyclic Jacobi sweeps on a real symmetric array (in place).

    Stops once the off-diagonal Frobenius norm is at most ``rtol`` times the
    norm of the input; returns the number of sweeps performed.
    """
    n = A.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += A[i, j] * A[i, j]
    thr = rtol * max(math.sqrt(total), 1e-300)
    skip = thr / (4.0 * n)
    sweeps = 0
    for _ in range(100):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += A[p, q] * A[p, q]
        if math.sqrt(2.0 * off) <= thr:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * aqk
                    A[q, k] = s * apk + c * aqk
                for k in range(n):
                    A[k, p] = A[p, k]
                    A[k, q] = A[q, k]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
    return sweeps


def _embedding(M: np.ndarray) -> np.ndarray:
    re, im = M.real, M.imag
    return np.ascontiguousarray(np.block([[re, -im], [im, re]]), dtype=float)


def _check_hermitian(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InputError("expected a nonempty square matrix")
    if np.max(np.abs(M - M.conj().T)) > 1e-12:
        raise InputError("matrix is not Hermitian within 1e-12")
    return (M + M.conj().T) / 2.0


def dense_eigenvalues(M) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi."""
    M = _check_hermitian(M)
    E = _embedding(M)
    _jacobi_diagonalise(E, JACOBI_RTOL)
    return np.sort(np.diag(E))[::2].copy()


def dense_eigen_max(M) -> float:
    """Largest eigenvalue of a Hermitian matrix by cyclic Jacobi."""
    M = _check_hermitian(M)
    if M.shape[0] == 1:
        return float(M[0, 0].real)
    E = _embedding(M)
    _jacobi_diagonalise(E, JACOBI_RTOL)
    return float(np.max(np.diag(E)))
