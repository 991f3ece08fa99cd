"""Seeded fuzz harnesses for the determinant identities and the eigensolver.

Every harness draws from :class:`~pertri.rng.SplitMix64`, so a reported
worst case can be replayed from ``(seed, trial)`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import determinants as dk
from .numrange import identity_residual
from .period import build_A_pm, random_valid_period
from .rng import SplitMix64
from .spectra import HermitianTridiagCorner, dense_eigen_max, lambda_max


@dataclass
class FuzzResult:
    name: str
    trials: int
    worst: float
    worst_trial: int
    tol: float

    @property
    def passed(self) -> bool:
        return self.worst <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.trials} trials, worst residual "
            f"{self.worst:.3e} (trial {self.worst_trial}, tol {self.tol:g})"
        )


def _maybe_zero(rng: SplitMix64, value, p_zero: float):
    return 0.0 if rng.random() < p_zero else value


def random_almost_tridiag(rng: SplitMix64, m: int, p_zero: float = 0.1) -> dk.AlmostTridiagSpec:
    diag = [_maybe_zero(rng, rng.complex(), p_zero) for _ in range(m)]
    upper = [_maybe_zero(rng, rng.complex(), p_zero) for _ in range(m - 1)]
    lower = [_maybe_zero(rng, rng.complex(), p_zero) for _ in range(m - 1)]
    top = _maybe_zero(rng, rng.complex(), p_zero)
    bottom = _maybe_zero(rng, rng.complex(), p_zero)
    return dk.AlmostTridiagSpec(dk.TridiagSpec(diag, upper, lower), top, bottom)


def fuzz_almost_tridiag(trials: int = 1000, seed: int = 42, sizes=(3, 12), tol: float = 1e-9) -> FuzzResult:
    """Cofactor expansion against the dense determinant."""
    rng = SplitMix64(seed)
    worst, where = 0.0, -1
    for trial in range(trials):
        m = rng.integer(*sizes)
        spec = random_almost_tridiag(rng, m)
        ref = dk.dense_det(spec.to_dense())
        err = abs(dk.almost_tridiag_det(spec) - ref) / max(1.0, abs(ref))
        if err > worst:
            worst, where = err, trial
    return FuzzResult("almost-tridiagonal expansion", trials, worst, where, tol)


def random_palindromic(rng: SplitMix64, m: int, radius: float = 2.0) -> np.ndarray:
    n = m - 1
    ell = np.array([rng.uniform(-radius, radius) for _ in range(m)])
    last = n // 2 if m % 2 else (n - 1) // 2
    for j in range(1, last + 1):
        ell[n - j + 1] = ell[j]
    return ell


def fuzz_palindromic(
    trials: int = 1000, seed: int = 42, parity: str = "odd", sizes=(3, 12), tol: float = 1e-9
) -> list[FuzzResult]:
    """Both centrosymmetric factorisations, both corner signs, one parity."""
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    want = 1 if parity == "odd" else 0
    candidates = [m for m in range(sizes[0], sizes[1] + 1) if m % 2 == want]
    rng = SplitMix64(seed)
    worst = {"A": (0.0, -1), "B": (0.0, -1)}
    for trial in range(trials):
        m = candidates[rng.integer(0, len(candidates) - 1)]
        ell = random_palindromic(rng, m)
        t = rng.uniform(-2.0, 2.0)
        sign = rng.sign()
        for key, check in (("A", dk.factor_check_Apm), ("B", dk.factor_check_Bpm)):
            lhs, rhs = check(ell, t, sign)
            err = dk.relative_gap(lhs, rhs)
            if err > worst[key][0]:
                worst[key] = (err, trial)
    return [
        FuzzResult(f"corner-matrix factorisation ({parity} n+1)", trials, *worst["A"], tol),
        FuzzResult(f"centrosymmetric factorisation ({parity} n+1)", trials, *worst["B"], tol),
    ]


def random_pencil(rng: SplitMix64, m: int, p_zero: float = 0.05) -> HermitianTridiagCorner:
    diag = [rng.uniform(-2.0, 2.0) for _ in range(m)]
    off = [_maybe_zero(rng, rng.complex(1.0), p_zero) for _ in range(m - 1)]
    return HermitianTridiagCorner(diag, off)


def fuzz_eigensolver(trials: int = 10_000, seed: int = 42, sizes=(2, 64), tol: float = 1e-10) -> FuzzResult:
    """Sturm bisection against dense Jacobi on random Hermitian pencils."""
    rng = SplitMix64(seed)
    worst, where = 0.0, -1
    for trial in range(trials):
        H = random_pencil(rng, rng.integer(*sizes))
        err = abs(lambda_max(H) - dense_eigen_max(H.to_dense()))
        if err > worst:
            worst, where = err, trial
    return FuzzResult("Sturm bisection vs Jacobi", trials, worst, where, tol)


def fuzz_polynomial_identity(
    words_per_size: int = 100, points: int = 20, seed: int = 42, sizes=range(2, 9), tol: float = 1e-8
) -> FuzzResult:
    """P against F_A+ F_A- for random words satisfying the hypotheses."""
    rng = SplitMix64(seed)
    worst, where, trial = 0.0, -1, 0
    for m in sizes:
        for _ in range(words_per_size):
            p = random_valid_period(rng, m)
            mats = (build_A_pm(p, 1), build_A_pm(p, -1))
            err = identity_residual(p, mats, points, rng.next_u64())
            if err > worst:
                worst, where = err, trial
            trial += 1
    return FuzzResult("P = F_A+ F_A-", trial, worst, where, tol)
