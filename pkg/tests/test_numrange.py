import math

import numpy as np
import pytest

from pertri.errors import HypothesisError, InputError, ParityError
from pertri.numrange import (
    SupportProfile,
    boundary_points,
    check_corollary,
    check_theorem,
    identity_residual,
    max_root_P,
    polynomial_profile,
    support_conv_union,
    support_function,
    support_profile,
    theta_grid,
    truncation_study,
)
from pertri.period import PeriodWords, build_A_pm, build_B_pm, hopping_sign, random_valid_period, shift_words
from pertri.rng import SplitMix64

SQRT3 = math.sqrt(3)
A_PLUS = np.array([[1, 1], [-1, 1]], dtype=complex)


def test_support_examples():
    assert support_function(A_PLUS, 0.0) == pytest.approx(1, abs=1e-12)
    assert support_function(np.zeros((3, 3)), 1.2) == 0
    B = build_B_pm(shift_words(3), 1)
    assert support_function(B, 0.0) == pytest.approx((1 + SQRT3) / 2, abs=1e-12)


def test_support_of_dense_matrix_falls_back():
    M = np.array([[1, 2, 3], [0, 1j, 1], [1, 0, -1]], dtype=complex)
    H = (M + M.conj().T) / 2
    assert support_function(M, 0.0) == pytest.approx(np.linalg.eigvalsh(H).max(), abs=1e-12)


def test_conv_union_examples():
    p = hopping_sign()
    mats = [build_A_pm(p, 1), build_A_pm(p, -1)]
    assert support_conv_union(mats, math.pi / 4) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert support_conv_union(mats, 0.0) == pytest.approx(1, abs=1e-12)
    assert support_conv_union([A_PLUS], 0.7) == support_function(A_PLUS, 0.7)
    with pytest.raises(InputError):
        support_conv_union([], 0.0)


def test_profile_validation():
    with pytest.raises(InputError):
        SupportProfile([0.0, 1.0], [1.0])
    with pytest.raises(InputError):
        SupportProfile([1.0, 0.5], [1.0, 2.0])
    with pytest.raises(InputError):
        SupportProfile([0.0], [math.nan])
    prof = support_profile([A_PLUS], grid=8, label="A+")
    assert prof.grid == 8 and prof.label == "A+"


def test_boundary_samples_touch_support():
    p = shift_words(5)
    for M in (build_A_pm(p, 1), build_A_pm(p, -1)):
        samples = boundary_points(M, 90)
        for s in samples:
            h = support_function(M, s.theta)
            assert (np.exp(-1j * s.theta) * s.point).real == pytest.approx(h, abs=1e-8)


def test_boundary_zero_matrix_and_grid_guard():
    assert all(s.point == 0 for s in boundary_points(np.zeros((1, 1)), 8))
    with pytest.raises(InputError):
        boundary_points(A_PLUS, 3)


def test_boundary_hopping_face_point():
    s = boundary_points(A_PLUS, 8)[0]
    assert s.point.real == pytest.approx(1, abs=1e-10)
    assert abs(s.point.imag) <= 1 + 1e-10
    assert s.degenerate


def test_reduced_boundary_is_ellipse():
    # W([[1, sqrt2], [0, 0]]) is the ellipse with foci 0 and 1 and minor axis sqrt2
    B = build_B_pm(shift_words(3), 1)
    a_major = math.sqrt(1 + 2) / 2
    for s in boundary_points(B, 72):
        z = s.point - 0.5
        assert (z.real / a_major) ** 2 + (z.imag / (math.sqrt(2) / 2)) ** 2 == pytest.approx(1, abs=1e-6)


def test_max_root_examples():
    p = hopping_sign()
    assert max_root_P(p, 0.0) == pytest.approx(1, abs=1e-12)
    assert max_root_P(p, math.pi / 4) == pytest.approx(math.sqrt(2), abs=1e-12)
    zero = PeriodWords(a=np.zeros(4), c=np.zeros(4))
    assert max_root_P(zero, 0.9) == pytest.approx(0, abs=1e-12)


def test_max_root_is_a_root_and_largest():
    from pertri.determinants import eval_P

    rng = SplitMix64(31)
    for m in range(2, 7):
        p = random_valid_period(rng, m)
        th = rng.uniform(0, 2 * math.pi)
        r = max_root_P(p, th)
        x, y = -math.cos(th), -math.sin(th)
        scale = max(1.0, abs(r)) ** (2 * m)
        assert abs(eval_P(p, r, x, y)) <= 1e-8 * scale
        for t in np.linspace(r + 1e-3, r + 10, 50):
            assert eval_P(p, t, x, y) > 0


def test_polynomial_profile_matches_hull():
    p = shift_words(4)
    prof = polynomial_profile(p, grid=36)
    hull = support_profile([build_A_pm(p, 1), build_A_pm(p, -1)], grid=36)
    assert np.max(np.abs(prof.values - hull.values)) <= 1e-10


def test_identity_residual_small():
    p = shift_words(6)
    assert identity_residual(p, (build_A_pm(p, 1), build_A_pm(p, -1)), 30, 1) <= 1e-10


def test_check_theorem_examples():
    rep = check_theorem(hopping_sign(), 360, 1e-10)
    assert rep.passed and rep.delta <= 1e-10
    rep = check_theorem(shift_words(7), 360, 1e-8)
    assert rep.passed and rep.identity_residual <= 1e-8
    assert rep.lines()[-1] == "PASS"
    with pytest.raises(HypothesisError):
        check_theorem(PeriodWords(a=[0, 2], c=[1, 1]), 36)


def test_check_theorem_detects_wrong_pair():
    # a pair of matrices that does not match P gives a large residual
    p = shift_words(3)
    wrong = (build_A_pm(p, 1), build_A_pm(p, 1))
    assert identity_residual(p, wrong, 20, 0) > 1e-3


def test_check_corollary_examples():
    rep = check_corollary(shift_words(3), 360, 1e-9)
    assert rep.passed and rep.agreement <= 1e-9 and rep.containment_excess <= 1e-9
    for m in (5, 7):
        assert check_corollary(shift_words(m), 120, 1e-8).passed
    with pytest.raises(ParityError):
        check_corollary(shift_words(4), 36)


def test_truncation_examples():
    rep = truncation_study(hopping_sign(), (2, 4, 8, 16, 32), grid=8)
    k = list(theta_grid(8)).index(math.pi / 4)
    gaps = [rep.limit[k] - row[k] for row in rep.profiles]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert rep.passed
    one = truncation_study(hopping_sign(), (1,), grid=8)
    assert np.allclose(one.profiles[0], 0)
    with pytest.raises(InputError):
        truncation_study(hopping_sign(), (4, 2), grid=8)


def test_truncation_without_hypotheses_uses_polynomial():
    p = PeriodWords(a=[0.0, 2.0, 1.0], c=[1.0, 1.0, 0.5])
    rep = truncation_study(p, (2, 6, 12), grid=24, tol=1e-9)
    assert rep.limit_source == "max_root_P"
    assert rep.monotone_excess <= 1e-9 and rep.bound_excess <= 1e-9
