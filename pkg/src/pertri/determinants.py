"""Determinant recurrences and the Kippenhahn-type polynomials.

All matrix sizes here are small (tens of rows), so the kernels favour plain
loops over vectorised tricks.  ``dense_det`` is the single reference
oracle every identity is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, PreconditionError
from .period import PeriodWords, proposition_coefficients


@dataclass(frozen=True)
class TridiagSpec:
    diag: np.ndarray
    upper: np.ndarray
    lower: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=complex)
        upper = np.asarray(self.upper, dtype=complex)
        lower = np.asarray(self.lower, dtype=complex)
        m = len(diag)
        if m < 1:
            raise InputError("tridiagonal matrix needs at least one row")
        if len(upper) != m - 1 or len(lower) != m - 1:
            raise InputError("off-diagonals must have length m-1")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)

    @property
    def size(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        m = self.size
        M = np.diag(self.diag).astype(complex)
        idx = np.arange(m - 1)
        M[idx, idx + 1] = self.upper
        M[idx + 1, idx] = self.lower
        return M


@dataclass(frozen=True)
class AlmostTridiagSpec:
    """Tridiagonal matrix plus the (1, m) and (m, 1) corner entries."""

    tridiag: TridiagSpec
    corner_top: complex = 0j
    corner_bottom: complex = 0j

    @property
    def size(self) -> int:
        return self.tridiag.size

    def to_dense(self) -> np.ndarray:
        M = self.tridiag.to_dense()
        m = self.size
        M[0, m - 1] += self.corner_top
        M[m - 1, 0] += self.corner_bottom
        return M


def dense_det(M) -> complex:
    """Reference determinant (LU with partial pivoting, via LAPACK)."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError("determinant needs a square matrix")
    if M.shape[0] == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(M))


def tridiag_det(s: TridiagSpec) -> complex:
    """Three-term recurrence ``D_k = d_k D_{k-1} - u_{k-1} l_{k-1} D_{k-2}``."""
    prev, cur = 1.0 + 0j, complex(s.diag[0])
    for k in range(1, s.size):
        prev, cur = cur, s.diag[k] * cur - s.upper[k - 1] * s.lower[k - 1] * prev
    return complex(cur)


def almost_tridiag_det(s: AlmostTridiagSpec) -> complex:
    """Four-term cofactor expansion of an almost tridiagonal determinant.

    ``det(U) = det(tri) - u_1m u_m1 det(inner) + (-1)^(m-1) (u_m1 prod(upper)
    + u_1m prod(lower))`` where ``inner`` drops the first and last row and
    column.  Sizes below 3 have no separate corners; use :func:`dense_det`.
    """
    m = s.size
    if m < 3:
        raise InputError("almost tridiagonal expansion needs m >= 3")
    t = s.tridiag
    inner = TridiagSpec(t.diag[1:-1], t.upper[1:-1], t.lower[1:-1])
    cyc = -1.0 if (m - 1) % 2 else 1.0
    return (
        tridiag_det(t)
        - s.corner_top * s.corner_bottom * tridiag_det(inner)
        + cyc * s.corner_bottom * np.prod(t.upper)
        + cyc * s.corner_top * np.prod(t.lower)
    )


# -- the polynomial P(t, x, y) -------------------------------------------------


def _pencil(p: PeriodWords, t: float, x: float, y: float) -> TridiagSpec:
    alpha, gamma = proposition_coefficients(p)
    m = p.n_plus_1
    diag = t + p.b.real * x + p.b.imag * y
    upper = alpha[: m - 1] * x + gamma[: m - 1] * y
    lower = np.conj(alpha[: m - 1]) * x + np.conj(gamma[: m - 1]) * y
    return TridiagSpec(diag.astype(complex), upper, lower)


def _real(v: complex, what: str) -> float:
    if abs(v.imag) > 1e-12 * max(1.0, abs(v.real)):
        raise ArithmeticError(f"{what} should be real, got imaginary part {v.imag:.3g}")
    return float(v.real)


def eval_G(p: PeriodWords, t: float, x: float, y: float) -> float:
    """Determinant of the (n+1)x(n+1) Hermitian pencil."""
    return _real(tridiag_det(_pencil(p, t, x, y)), "G")


def eval_H(p: PeriodWords, t: float, x: float, y: float) -> float:
    """Determinant of the pencil with first and last rows removed (1 if n = 1)."""
    if p.n == 1:
        return 1.0
    s = _pencil(p, t, x, y)
    inner = TridiagSpec(s.diag[1:-1], s.upper[1:-1], s.lower[1:-1])
    return _real(tridiag_det(inner), "H")


def coupling_moduli(p: PeriodWords, x: float, y: float) -> np.ndarray:
    """``r_j = |alpha_j x + gamma_j y|`` for j = 0..n."""
    alpha, gamma = proposition_coefficients(p)
    return np.abs(alpha * x + gamma * y)


def polynomial_terms(p: PeriodWords, t: float, x: float, y: float) -> tuple[float, float]:
    """``(G - r_n^2 H, 2 prod r_j)``; P is the difference of their squares."""
    r = coupling_moduli(p, x, y)
    base = eval_G(p, t, x, y) - r[-1] ** 2 * eval_H(p, t, x, y)
    return base, 2.0 * float(np.prod(r))


def eval_P(p: PeriodWords, t: float, x: float, y: float) -> float:
    base, cross = polynomial_terms(p, t, x, y)
    return base * base - cross * cross


def factor_values(p: PeriodWords, t: float, x: float, y: float) -> tuple[float, float]:
    """The two real-rooted factors ``G - r_n^2 H -/+ 2 prod r_j`` of P."""
    base, cross = polynomial_terms(p, t, x, y)
    return base - cross, base + cross


def shifted_det_with_derivative(shifts, offsq, t: float) -> tuple[float, float]:
    """``det(tI + S)`` and its t-derivative for a real symmetric tridiagonal S.

    ``shifts`` is the diagonal of S, ``offsq`` the squared off-diagonals.
    """
    d_prev, d_cur = 1.0, t + shifts[0] if len(shifts) else 1.0
    g_prev, g_cur = 0.0, 1.0 if len(shifts) else 0.0
    for k in range(1, len(shifts)):
        dk = t + shifts[k]
        q = offsq[k - 1]
        d_new = dk * d_cur - q * d_prev
        g_new = d_cur + dk * g_cur - q * g_prev
        d_prev, d_cur = d_cur, d_new
        g_prev, g_cur = g_cur, g_new
    return d_cur, g_cur


def kippenhahn_eval(M, t: float, x: float, y: float) -> float:
    """``F_M(t, x, y) = det(t I + x Re(M) + y Im(M))`` by dense determinant."""
    M = np.asarray(M, dtype=complex)
    re = (M + M.conj().T) / 2.0
    im = (M - M.conj().T) / 2j
    pencil = t * np.eye(M.shape[0]) + x * re + y * im
    return _real(dense_det(pencil), "F_M")


# -- centrosymmetric factorisations -------------------------------------------


def _check_palindromic(ell: np.ndarray) -> None:
    m = len(ell)
    n = m - 1
    if n < 2:
        raise PreconditionError("factor checks need n >= 2 (at least three entries)")
    last = n // 2 if m % 2 else (n - 1) // 2
    for j in range(1, last + 1):
        lhs, rhs = ell[j], ell[n - j + 1]
        if abs(lhs - rhs) > 1e-12 * max(1.0, abs(lhs), abs(rhs)):
            raise PreconditionError(f"entries must be palindromic: ell_{j}={lhs!r} != ell_{n - j + 1}={rhs!r}")


def _sym_tridiag(diag, off, lower=None) -> np.ndarray:
    m = len(diag)
    M = np.diag(np.asarray(diag, dtype=float))
    lower = off if lower is None else lower
    for k in range(m - 1):
        M[k, k + 1] = off[k]
        M[k + 1, k] = lower[k]
    return M


def _odd_pair(ell, t, first):
    """Size n/2+1 factor with the doubled last subdiagonal entry."""
    h = (len(ell) - 1) // 2
    diag = [t + first] + [t] * h
    upper = list(ell[1 : h + 1])
    lower = list(ell[1:h]) + [2.0 * ell[h]]
    return _sym_tridiag(diag, upper, lower)


def _leading(ell, t, first, size):
    diag = [t + first] + [t] * (size - 1)
    return _sym_tridiag(diag, list(ell[1:size]))


def _even_half(ell, t, first, last_shift):
    k = len(ell) // 2
    diag = [t + first] + [t] * (k - 1)
    diag[-1] += last_shift
    return _sym_tridiag(diag, list(ell[1:k]))


def factor_check_Apm(ell, t: float, sign: int) -> tuple[float, float]:
    """Both sides of the determinant factorisation of the corner matrix.

    The left side is the full (n+1)x(n+1) matrix with diagonal t,
    off-diagonals ``ell_0..ell_{n-1}`` and corners ``sign*ell_n``.
    """
    ell = np.asarray(ell, dtype=float)
    _check_palindromic(ell)
    s = float(sign)
    m = len(ell)
    n = m - 1
    full = _sym_tridiag([t] * m, ell[:n])
    full[0, n] = full[n, 0] = s * ell[n]
    lhs = dense_det(full).real
    if m % 2:
        rhs = dense_det(_odd_pair(ell, t, s * ell[0])).real * dense_det(
            _leading(ell, t, -s * ell[0], n // 2)
        ).real
    else:
        k = m // 2
        rhs = dense_det(_even_half(ell, t, s * ell[0], ell[k])).real * dense_det(
            _even_half(ell, t, -s * ell[0], -ell[k])
        ).real
    return float(lhs), float(rhs)


def factor_check_Bpm(ell, t: float, sign: int) -> tuple[float, float]:
    """Both sides for the centrosymmetric matrix with ``t + sign*ell_0`` at both ends."""
    ell = np.asarray(ell, dtype=float)
    _check_palindromic(ell)
    s = float(sign)
    m = len(ell)
    n = m - 1
    diag = [t] * m
    diag[0] += s * ell[0]
    diag[n] += s * ell[0]
    lhs = dense_det(_sym_tridiag(diag, ell[1:])).real
    if m % 2:
        rhs = dense_det(_leading(ell, t, s * ell[0], n // 2)).real * dense_det(
            _odd_pair(ell, t, s * ell[0])
        ).real
    else:
        k = m // 2
        rhs = dense_det(_even_half(ell, t, s * ell[0], ell[k])).real * dense_det(
            _even_half(ell, t, s * ell[0], -ell[k])
        ).real
    return float(lhs), float(rhs)


def relative_gap(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


__all__ = [
    "AlmostTridiagSpec",
    "TridiagSpec",
    "almost_tridiag_det",
    "coupling_moduli",
    "dense_det",
    "eval_G",
    "eval_H",
    "eval_P",
    "factor_check_Apm",
    "factor_check_Bpm",
    "factor_values",
    "kippenhahn_eval",
    "polynomial_terms",
    "relative_gap",
    "shifted_det_with_derivative",
    "tridiag_det",
]
