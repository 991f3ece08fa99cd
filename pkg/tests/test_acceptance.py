"""Acceptance criteria with their pinned tolerances.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py`` to print one PASS/FAIL line each.
"""

import math
import sys

import numpy as np
import pytest

from pertri.fuzz import fuzz_almost_tridiag, fuzz_eigensolver, fuzz_palindromic, fuzz_polynomial_identity
from pertri.numrange import check_corollary, check_theorem, support_conv_union, support_function, theta_grid, truncation_study
from pertri.period import build_A_pm, build_B_pm, hopping_sign, shift_words

pytestmark = pytest.mark.acceptance


def _line(label, value, tol, passed=None):
    passed = value <= tol if passed is None else passed
    return passed, f"{'PASS' if passed else 'FAIL'} [{label}] value {value:.3e}, tolerance {tol:g}"


def criterion_1():
    p = hopping_sign()
    mats = [build_A_pm(p, 1), build_A_pm(p, -1)]
    err = max(
        abs(support_conv_union(mats, th) - (abs(math.cos(th)) + abs(math.sin(th)))) for th in theta_grid(720)
    )
    return [_line("1 hopping-sign hull is the square, 720 directions", err, 1e-10)]


def criterion_2():
    worst = max(check_theorem(shift_words(m), 360, 1e-8).delta for m in range(2, 9))
    return [_line("2 max_root_P vs hull support, shift words n+1=2..8, 360 directions", worst, 1e-8)]


def criterion_3():
    res = fuzz_polynomial_identity(100, 20, 42, range(2, 9), 1e-8)
    return [_line(f"3 P = F_A+ F_A-, {res.trials} random valid words x 20 points", res.worst, 1e-8)]


def criterion_4():
    out = []
    worst = max(check_corollary(shift_words(m), 360, 1e-8).agreement for m in (3, 5, 7))
    out.append(_line("4a hull(B+, B-) vs hull(A+, A-), n+1=3,5,7, 360 directions", worst, 1e-8))
    r2 = math.sqrt(2)
    p = shift_words(3)
    exact = all(
        np.array_equal(build_B_pm(p, s), np.array([[s, r2], [0, 0]], dtype=complex)) for s in (1, -1)
    )
    out.append(_line("4b B+/- = [[+/-1, sqrt2], [0, 0]] exactly", 0.0 if exact else 1.0, 0.0, exact))
    err = abs(support_function(build_B_pm(p, 1), 0.0) - (1 + math.sqrt(3)) / 2)
    out.append(_line("4c support of W(B+) at theta=0 is (1+sqrt3)/2", err, 1e-10))
    return out


def criterion_5():
    res = fuzz_almost_tridiag(1000, 42, (3, 12), 1e-9)
    return [_line("5 almost-tridiagonal expansion vs LU, 1000 matrices", res.worst, 1e-9)]


def criterion_6():
    out = []
    for parity in ("odd", "even"):
        for res in fuzz_palindromic(1000, 42, parity, (3, 12), 1e-9):
            out.append(_line(f"6 {res.name}, 1000 instances", res.worst, 1e-9))
    return out


def criterion_7():
    res = fuzz_eigensolver(10_000, 42, (2, 64), 1e-10)
    return [_line("7 Sturm bisection vs Jacobi, 10000 pencils m=2..64", res.worst, 1e-10)]


def criterion_8():
    rep = truncation_study(hopping_sign(), (2, 4, 8, 16, 32, 64), 720, 1e-12)
    k = int(np.argmin(np.abs(rep.thetas - math.pi / 4)))
    gap = float(rep.limit[k] - rep.profiles[-1][k])
    return [
        _line("8a finite sections nondecreasing in N", rep.monotone_excess, 1e-12),
        _line("8b finite sections below hull support", rep.bound_excess, 1e-10),
        _line("8c gap at N=64, theta=pi/4", gap, 0.02),
    ]


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 9)])
def test_criterion(criterion, acceptance_log):
    results = criterion()
    for _, line in results:
        print(line)
        acceptance_log.append(line)
    assert all(ok for ok, _ in results), "; ".join(line for ok, line in results if not ok)


def main() -> int:
    ok = True
    for criterion in CRITERIA:
        for passed, line in criterion():
            print(line, flush=True)
            ok &= passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
