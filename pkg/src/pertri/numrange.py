"""Support functions and numerical-range comparisons.

For a square matrix M the support function of W(M) in direction theta is
``h(theta) = lambda_max(Re(exp(-i theta) M))``.  The closure of the numerical
range of the periodic operator has support ``max_root_P(theta)``, the
largest real root of ``t -> P(t, -cos theta, -sin theta)``.  The checks here
compare that value against supports of the finite symbol matrices on a
uniform grid of directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import determinants as dk
from .errors import InputError, ParityError, ShapeError
from .period import (
    DEFAULT_TOL as HYP_TOL,
    PeriodWords,
    build_A_pm,
    build_B1_pm,
    build_B_pm,
    build_truncation,
    require_hypotheses,
    validate_period,
)
from .rng import SplitMix64
from .spectra import (
    HermitianTridiagCorner,
    dense_eigen_max,
    dense_eigenvalues,
    lambda_max,
    real_part_pencil,
    sturm_count,
)

DEFAULT_GRID = 720
DEFAULT_TOL = 1e-8
SOLVER_TOL = 1e-12


@dataclass(frozen=True)
class SupportProfile:
    thetas: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        thetas = np.asarray(self.thetas, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if thetas.shape != values.shape or thetas.ndim != 1:
            raise InputError("thetas and values must be equal-length vectors")
        if not np.all(np.isfinite(values)):
            raise InputError("support values must be finite")
        if len(thetas) > 1 and np.any(np.diff(thetas) <= 0):
            raise InputError("thetas must be strictly increasing")
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "values", values)

    @property
    def grid(self) -> int:
        return len(self.thetas)


@dataclass(frozen=True)
class BoundarySample:
    theta: float
    point: complex
    degenerate: bool = False


def theta_grid(grid: int) -> np.ndarray:
    if grid < 1:
        raise InputError("grid must be positive")
    return 2.0 * math.pi * np.arange(grid) / grid


def _hermitian_part(M: np.ndarray, theta: float) -> np.ndarray:
    R = np.exp(-1j * theta) * M
    return (R + R.conj().T) / 2.0


def support_function(M, theta: float, tol: float = SOLVER_TOL) -> float:
    """``max Re(exp(-i theta) z)`` over ``z`` in W(M)."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InputError("support function needs a nonempty square matrix")
    try:
        pencil = real_part_pencil(M, theta)
    except ShapeError:
        return dense_eigen_max(_hermitian_part(M, theta))
    return lambda_max(pencil, tol)


def support_conv_union(Ms, theta: float, tol: float = SOLVER_TOL) -> float:
    """Support of the convex hull of the union of the W(M) for M in ``Ms``."""
    Ms = list(Ms)
    if not Ms:
        raise InputError("need at least one matrix")
    return max(support_function(M, theta, tol) for M in Ms)


def support_profile(Ms, grid: int = DEFAULT_GRID, label: str = "", tol: float = SOLVER_TOL) -> SupportProfile:
    thetas = theta_grid(grid)
    values = [support_conv_union(Ms, th, tol) for th in thetas]
    return SupportProfile(thetas, np.array(values), label)


# -- boundary points -------------------------------------------------------------


def _top_eigvector(H: np.ndarray, lam: float) -> np.ndarray:
    m = H.shape[0]
    scale = max(1.0, float(np.max(np.abs(H))))
    shift = lam + 1e-10 * scale
    v = np.ones(m, dtype=complex) + 1j * np.linspace(0.0, 0.5, m)
    v /= np.linalg.norm(v)
    shifted = H - shift * np.eye(m)
    for _ in range(3):
        w = np.linalg.solve(shifted, v)
        v = w / np.linalg.norm(w)
    return v


def _is_degenerate(herm: np.ndarray, pencil, lam: float) -> bool:
    m = herm.shape[0]
    if m == 1:
        return False
    gap = 1e-8 * max(1.0, abs(lam))
    if isinstance(pencil, HermitianTridiagCorner) and pencil.corner == 0:
        return sturm_count(pencil, lam - gap) <= m - 2
    eig = dense_eigenvalues(herm)
    return bool(eig[-2] >= lam - gap)


def boundary_points(M, grid: int = DEFAULT_GRID, tol: float = SOLVER_TOL) -> list[BoundarySample]:
    """Points of W(M) where the support lines at ``2 pi k / grid`` touch.

    Each point is ``<M v, v>`` for a unit top eigenvector ``v`` of
    ``Re(exp(-i theta) M)``.  When the top eigenvalue is (nearly) repeated
    the support set is an edge; any point on it is returned and the sample is
    flagged ``degenerate``.
    """
    if grid < 4:
        raise InputError("boundary sampling needs grid >= 4")
    M = np.asarray(M, dtype=complex)
    out = []
    for theta in theta_grid(grid):
        herm = _hermitian_part(M, theta)
        try:
            pencil = real_part_pencil(M, theta)
            lam = lambda_max(pencil, tol)
        except ShapeError:
            pencil = None
            lam = dense_eigen_max(herm)
        if M.shape[0] == 1:
            v = np.ones(1, dtype=complex)
        else:
            v = _top_eigvector(herm, lam)
        point = complex(np.vdot(v, M @ v))
        out.append(BoundarySample(float(theta), point, _is_degenerate(herm, pencil, lam)))
    return out


# -- the polynomial side -----------------------------------------------------------


def _factor_root(shifts, offsq_g, offsq_h, r_last_sq, prod_r, sign, upper, tol):
    """Largest root of ``G - r_n^2 H - sign * 2 prod r`` (a real-rooted monic
    polynomial in t) by Newton from above, then sign bisection."""
    n_plus_1 = len(shifts)
    cross = 2.0 * sign * prod_r

    def f(t):
        g, dg = dk.shifted_det_with_derivative(shifts, offsq_g, t)
        if n_plus_1 == 2:
            h, dh = 1.0, 0.0
        else:
            h, dh = dk.shifted_det_with_derivative(shifts[1:-1], offsq_h, t)
        return g - r_last_sq * h - cross, dg - r_last_sq * dh

    # beyond the largest root f is positive, increasing and convex, so Newton
    # iterates started above it decrease monotonically onto it
    t = upper
    above = upper
    step = 0.0
    for _ in range(2000):
        v, dv = f(t)
        if v <= 0.0 or dv <= 0.0:
            break
        above = t
        step = v / dv
        t = t - step
        if step <= 0.25 * tol:
            break
    v, _ = f(t)
    if v > 0.0:
        probe = t - max(4.0 * step, tol)
        if f(probe)[0] >= 0.0:
            return t
        lo, hi = probe, t
    else:
        lo, hi = t, above
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid)[0] > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def max_root_P(p: PeriodWords, theta: float, tol: float = SOLVER_TOL) -> float:
    """Largest real root of ``t -> P(t, -cos theta, -sin theta)``.

    P factors as ``(G - r_n^2 H - 2 prod r)(G - r_n^2 H + 2 prod r)``; each
    factor is the characteristic polynomial of a Hermitian almost
    tridiagonal matrix and is handled separately.
    """
    x, y = -math.cos(theta), -math.sin(theta)
    m = p.n_plus_1
    shifts = (p.b.real * x + p.b.imag * y).tolist()
    r = dk.coupling_moduli(p, x, y)
    offsq_g = (r[: m - 1] ** 2).tolist()
    offsq_h = (r[1 : m - 2] ** 2).tolist() if m > 2 else []
    r_last = float(r[m - 1])
    radius = np.zeros(m)
    radius[: m - 1] += r[: m - 1]
    radius[1:] += r[: m - 1]
    if m == 2:
        radius = np.full(2, r[0] + r[1])
    else:
        radius[0] += r_last
        radius[m - 1] += r_last
    upper = float(np.max(-np.asarray(shifts) + radius)) + 1.0
    prod_r = float(np.prod(r))
    scale = max(1.0, upper)
    width = min(tol, 1e-13 * scale)
    return max(
        _factor_root(shifts, offsq_g, offsq_h, r_last * r_last, prod_r, s, upper, width)
        for s in (1.0, -1.0)
    )


def polynomial_profile(p: PeriodWords, grid: int = DEFAULT_GRID, tol: float = SOLVER_TOL) -> SupportProfile:
    thetas = theta_grid(grid)
    return SupportProfile(thetas, np.array([max_root_P(p, th, tol) for th in thetas]), "max_root_P")


# -- comparison engines -------------------------------------------------------------


def _scaled_residual(value: float, reference: float, *magnitudes: float) -> float:
    return abs(value - reference) / max(1.0, abs(value), abs(reference), *map(abs, magnitudes))


def identity_residual(p: PeriodWords, factor_sets, trials: int = 50, seed: int = 0, radius: float = 2.0) -> float:
    """Worst scaled gap between P and a product of Kippenhahn polynomials.

    ``factor_sets`` is a list of matrices whose F_M multiply to P.  The scale
    is the largest of |P|, the product, and the two squared terms of P.
    """
    rng = SplitMix64(seed)
    worst = 0.0
    for _ in range(trials):
        t, x, y = (rng.uniform(-radius, radius) for _ in range(3))
        base, cross = dk.polynomial_terms(p, t, x, y)
        P = base * base - cross * cross
        prod = 1.0
        for M in factor_sets:
            prod *= dk.kippenhahn_eval(M, t, x, y)
        worst = max(worst, _scaled_residual(P, prod, base * base, cross * cross))
    return worst


@dataclass
class TheoremReport:
    n_plus_1: int
    grid: int
    tol: float
    thetas: np.ndarray
    max_roots: np.ndarray
    hull_support: np.ndarray
    delta: float
    worst_theta: float
    identity_residual: float
    passed: bool

    def lines(self) -> list[str]:
        return [
            f"n+1 = {self.n_plus_1}, grid = {self.grid}, tol = {self.tol:g}",
            f"support gap max|max_root_P - h_hull| = {self.delta:.3e} at theta = {self.worst_theta:.6f}",
            f"identity residual |P - F_A+ F_A-| (scaled) = {self.identity_residual:.3e}",
            "PASS" if self.passed else "FAIL",
        ]


def check_theorem(
    p: PeriodWords,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    identity_trials: int = 50,
    seed: int = 0,
) -> TheoremReport:
    """Compare max_root_P with the support of conv(W(A+) u W(A-)) on a grid."""
    require_hypotheses(p, HYP_TOL)
    Ap, Am = build_A_pm(p, 1), build_A_pm(p, -1)
    thetas = theta_grid(grid)
    roots = np.array([max_root_P(p, th) for th in thetas])
    hull = np.array([support_conv_union((Ap, Am), th) for th in thetas])
    diff = np.abs(roots - hull)
    k = int(np.argmax(diff))
    resid = identity_residual(p, (Ap, Am), identity_trials, seed)
    delta = float(diff[k])
    return TheoremReport(
        n_plus_1=p.n_plus_1,
        grid=grid,
        tol=tol,
        thetas=thetas,
        max_roots=roots,
        hull_support=hull,
        delta=delta,
        worst_theta=float(thetas[k]),
        identity_residual=resid,
        passed=bool(delta <= tol and resid <= tol),
    )


@dataclass
class CorollaryReport:
    n_plus_1: int
    grid: int
    tol: float
    thetas: np.ndarray
    hull_A: np.ndarray
    hull_B: np.ndarray
    agreement: float
    containment_excess: float
    factor_residual: float
    passed: bool

    def lines(self) -> list[str]:
        return [
            f"n+1 = {self.n_plus_1}, grid = {self.grid}, tol = {self.tol:g}",
            f"max|h_hull(B) - h_hull(A)| = {self.agreement:.3e}",
            f"max(h(B1) - h(B)) = {self.containment_excess:.3e}",
            f"identity residual |P - F_B+ F_B1- F_B- F_B1+| (scaled) = {self.factor_residual:.3e}",
            "PASS" if self.passed else "FAIL",
        ]


def check_corollary(
    p: PeriodWords,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    identity_trials: int = 50,
    seed: int = 0,
) -> CorollaryReport:
    """Compare the hull supports from B+/B- and A+/A- for odd period length."""
    if p.n_plus_1 % 2 == 0:
        raise ParityError(f"the reduced matrices need odd n+1, got {p.n_plus_1}")
    require_hypotheses(p, HYP_TOL)
    A = (build_A_pm(p, 1), build_A_pm(p, -1))
    B = (build_B_pm(p, 1), build_B_pm(p, -1))
    B1 = (build_B1_pm(p, 1), build_B1_pm(p, -1))
    thetas = theta_grid(grid)
    hA = np.array([support_conv_union(A, th) for th in thetas])
    hB = np.array([support_conv_union(B, th) for th in thetas])
    excess = -math.inf
    for th in thetas:
        for sub, full in zip(B1, B):
            excess = max(excess, support_function(sub, th) - support_function(full, th))
    resid = identity_residual(p, (B[0], B1[1], B[1], B1[0]), identity_trials, seed)
    agreement = float(np.max(np.abs(hA - hB)))
    return CorollaryReport(
        n_plus_1=p.n_plus_1,
        grid=grid,
        tol=tol,
        thetas=thetas,
        hull_A=hA,
        hull_B=hB,
        agreement=agreement,
        containment_excess=float(excess),
        factor_residual=resid,
        passed=bool(agreement <= tol and excess <= tol and resid <= tol),
    )


@dataclass
class TruncationReport:
    sizes: list
    thetas: np.ndarray
    profiles: np.ndarray
    limit: np.ndarray
    limit_source: str
    gaps: list
    monotone_excess: float
    bound_excess: float
    tol: float
    passed: bool
    notes: list = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"limit support from {self.limit_source}; grid = {len(self.thetas)}"]
        for N, gap in zip(self.sizes, self.gaps):
            out.append(f"  N = {N:4d}: sup gap = {gap:.6e}")
        out.append(f"max monotonicity violation = {self.monotone_excess:.3e}")
        out.append(f"max excess over limit = {self.bound_excess:.3e}")
        out.append("PASS" if self.passed else "FAIL")
        return out


def truncation_study(
    p: PeriodWords,
    sizes=(2, 4, 8, 16, 32, 64),
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> TruncationReport:
    """Supports of the finite sections against the limiting support.

    The limit is the A+/A- hull when the symmetry hypotheses hold and the
    polynomial root otherwise.
    """
    sizes = [int(N) for N in sizes]
    if not sizes or any(N < 1 for N in sizes):
        raise InputError("sizes must be positive")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError("sizes must be strictly increasing")
    thetas = theta_grid(grid)
    profiles = np.array(
        [[support_function(build_truncation(p, N), th) for th in thetas] for N in sizes]
    )
    if validate_period(p, HYP_TOL).hypotheses_hold:
        A = (build_A_pm(p, 1), build_A_pm(p, -1))
        limit = np.array([support_conv_union(A, th) for th in thetas])
        source = "conv(W(A+) u W(A-))"
    else:
        limit = np.array([max_root_P(p, th) for th in thetas])
        source = "max_root_P"
    running = np.maximum.accumulate(profiles, axis=0)
    monotone_excess = float(np.max(running - profiles))
    bound_excess = float(np.max(profiles - limit[None, :]))
    gaps = [float(np.max(limit - row)) for row in profiles]
    return TruncationReport(
        sizes=sizes,
        thetas=thetas,
        profiles=profiles,
        limit=limit,
        limit_source=source,
        gaps=gaps,
        monotone_excess=monotone_excess,
        bound_excess=bound_excess,
        tol=tol,
        passed=bool(monotone_excess <= tol and bound_excess <= tol),
    )
