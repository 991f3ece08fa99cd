"""Property-based checks of the invariants, driven by hypothesis."""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from pertri import determinants as dk
from pertri.numrange import boundary_points, max_root_P, support_conv_union, support_function, theta_grid
from pertri.period import PeriodWords, build_A_pm, random_valid_period, symbol_coefficients
from pertri.rng import SplitMix64
from pertri.spectra import HermitianTridiagCorner, dense_eigen_max, lambda_max, sturm_count

settings.register_profile("pertri", deadline=None, max_examples=60)
settings.load_profile("pertri")

reals = st.floats(-2, 2, allow_nan=False, allow_infinity=False)
angles = st.floats(0, 2 * math.pi, allow_nan=False)
complexes = st.builds(complex, reals, reals)
seeds = st.integers(0, 2**64 - 1)


@st.composite
def tridiagonal(draw, min_size=1, max_size=10):
    m = draw(st.integers(min_size, max_size))
    M = np.zeros((m, m), dtype=complex)
    for k in range(m):
        M[k, k] = draw(complexes)
        if k + 1 < m:
            M[k, k + 1] = draw(complexes)
            M[k + 1, k] = draw(complexes)
    return M


@st.composite
def pencils(draw):
    m = draw(st.integers(1, 24))
    diag = draw(st.lists(reals, min_size=m, max_size=m))
    off = draw(st.lists(complexes, min_size=m - 1, max_size=m - 1))
    return HermitianTridiagCorner(diag, off)


@st.composite
def valid_words(draw, sizes=(2, 8)):
    m = draw(st.integers(*sizes))
    return random_valid_period(SplitMix64(draw(seeds)), m)


@given(tridiagonal(), angles)
def test_width_nonnegative(M, theta):
    assert support_function(M, theta) + support_function(M, theta + math.pi) >= -1e-10


@given(tridiagonal(), angles, st.floats(0.01, 50))
def test_scaling_equivariance(M, theta, s):
    assert math.isclose(support_function(s * M, theta), s * support_function(M, theta), rel_tol=1e-10, abs_tol=1e-10 * s)


@given(tridiagonal(), angles, complexes)
def test_translation_equivariance(M, theta, z):
    shifted = support_function(M + z * np.eye(len(M)), theta)
    expected = support_function(M, theta) + (np.exp(-1j * theta) * z).real
    assert math.isclose(shifted, expected, abs_tol=1e-10)


@settings(max_examples=25)
@given(tridiagonal(max_size=7))
def test_boundary_points_inside_half_planes(M):
    grid = 16
    samples = boundary_points(M, grid)
    supports = [support_function(M, th) for th in theta_grid(grid)]
    for s in samples:
        for th, h in zip(theta_grid(grid), supports):
            assert (np.exp(-1j * th) * s.point).real <= h + 1e-8


@given(pencils(), reals)
def test_lambda_max_shift_equivariance(H, s):
    shifted = HermitianTridiagCorner(H.diag + s, H.off)
    assert math.isclose(lambda_max(shifted), lambda_max(H) + s, abs_tol=1e-11)


@given(pencils())
def test_lambda_max_matches_oracle(H):
    assert abs(lambda_max(H) - dense_eigen_max(H.to_dense())) <= 1e-10


@given(pencils())
def test_sturm_count_at_gershgorin_ends(H):
    lo, hi = H.gershgorin()
    pad = 1e-9 * max(1.0, H.inf_norm())
    assert sturm_count(H, hi + pad) == H.size
    assert sturm_count(H, lo - pad) == 0


@given(st.integers(1, 12), seeds)
def test_tridiag_det_matches_dense(m, seed):
    rng = SplitMix64(seed)
    s = dk.TridiagSpec(
        [rng.complex() for _ in range(m)], [rng.complex() for _ in range(m - 1)], [rng.complex() for _ in range(m - 1)]
    )
    ref = dk.dense_det(s.to_dense())
    assert abs(dk.tridiag_det(s) - ref) <= 1e-9 * max(1.0, abs(ref))


@given(valid_words(), reals, reals, reals, st.floats(0.1, 3))
def test_P_homogeneous_and_even(p, t, x, y, lam):
    m = p.n_plus_1
    base = dk.eval_P(p, t, x, y)
    scaled = dk.eval_P(p, lam * t, lam * x, lam * y)
    mag = max(1.0, abs(t) + abs(x) + abs(y)) ** (2 * m)
    assert abs(scaled - lam ** (2 * m) * base) <= 1e-9 * mag * max(1.0, lam ** (2 * m))
    assert abs(dk.eval_P(p, t, -x, -y) - base) <= 1e-9 * mag


@given(valid_words(), reals, reals)
def test_coupling_moduli_mirror(p, x, y):
    r = dk.coupling_moduli(p, x, y)
    n = p.n
    for j in range(1, n // 2 + 1):
        assert math.isclose(r[j], r[n - j + 1], abs_tol=1e-12)
    sc = symbol_coefficients(p)
    assert np.allclose(r, np.hypot(sc.alpha * x, sc.gamma_im * y))


@given(valid_words(), reals, reals, reals)
def test_P_equals_product(p, t, x, y):
    Ap, Am = build_A_pm(p, 1), build_A_pm(p, -1)
    prod = dk.kippenhahn_eval(Ap, t, x, y) * dk.kippenhahn_eval(Am, t, x, y)
    value = dk.eval_P(p, t, x, y)
    base, cross = dk.polynomial_terms(p, t, x, y)
    scale = max(1.0, abs(value), abs(prod), base * base, cross * cross)
    assert abs(value - prod) <= 1e-8 * scale


@settings(max_examples=30)
@given(valid_words(), angles)
def test_support_identity(p, theta):
    hull = support_conv_union([build_A_pm(p, 1), build_A_pm(p, -1)], theta)
    assert abs(max_root_P(p, theta) - hull) <= 1e-8


@given(st.lists(reals, min_size=2, max_size=8))
def test_gamma_zero_when_first_condition_holds(c):
    m = len(c)
    a = np.zeros(m)
    a[1 % m] = c[0]
    sc = symbol_coefficients(PeriodWords(a=a, c=c))
    assert sc.gamma_im[0] == 0
