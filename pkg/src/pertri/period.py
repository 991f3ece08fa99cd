"""Period words of a periodic tridiagonal operator and its finite matrices.

The operator ``T(a, b, c)`` acts on l2(N0) with the infinite matrix whose
row ``k`` carries ``a_k, b_k, c_k`` (sub-, main and superdiagonal), all
indices read modulo the period length ``n + 1``.  Row 0 starts with
``b_0, c_0``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import HypothesisError, InputError, ParityError
from .rng import SplitMix64

DEFAULT_TOL = 1e-12


def _as_word(values, name: str) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise InputError(f"{name} must be a one-dimensional word")
    if np.iscomplexobj(arr) and np.all(arr.imag == 0):
        arr = arr.real
    dtype = complex if np.iscomplexobj(arr) else float
    arr = np.array(arr, dtype=dtype)
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PeriodWords:
    """The period data ``a_0..a_n``, ``b_0..b_n``, ``c_0..c_n``.

    ``a`` and ``c`` are normally real; complex words are stored as given and
    are only accepted by the polynomial evaluators.
    """

    a: np.ndarray
    c: np.ndarray
    b: np.ndarray = None

    def __post_init__(self):
        a = _as_word(self.a, "a")
        c = _as_word(self.c, "c")
        b = np.zeros(len(a), dtype=complex) if self.b is None else np.asarray(self.b, dtype=complex)
        b = np.array(b, dtype=complex)
        b.setflags(write=False)
        if len(a) < 2:
            raise InputError("period length n+1 must be at least 2")
        if not (len(a) == len(c) == len(b)):
            raise InputError(
                f"word lengths differ: len(a)={len(a)}, len(b)={len(b)}, len(c)={len(c)}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "b", b)

    @property
    def n_plus_1(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def is_real(self) -> bool:
        return not (np.iscomplexobj(self.a) or np.iscomplexobj(self.c))

    @property
    def has_zero_diagonal(self) -> bool:
        return bool(np.all(self.b == 0))

    def to_json(self) -> dict:
        def enc(w):
            return [float(v) for v in w] if not np.iscomplexobj(w) else [[v.real, v.imag] for v in w]

        doc = {"n_plus_1": self.n_plus_1, "a": enc(self.a), "c": enc(self.c)}
        if not self.has_zero_diagonal:
            doc["b"] = [[v.real, v.imag] for v in self.b]
        return doc


@dataclass(frozen=True)
class SymbolCoefficients:
    """``alpha_j`` and the imaginary parts ``g_j`` of ``gamma_j = i g_j``."""

    alpha: np.ndarray
    gamma_im: np.ndarray


@dataclass(frozen=True)
class ValidationFailure:
    condition: str
    index: int
    lhs: float
    rhs: float

    def describe(self) -> str:
        negated = self.condition.replace(" = ", " ≠ ", 1)
        return f"{negated} ({self.lhs:.17g} vs {self.rhs:.17g})"


@dataclass(frozen=True)
class ValidationReport:
    hypotheses_hold: bool
    failures: list = field(default_factory=list)
    parity: str = "even"

    def __str__(self) -> str:
        head = f"period parity: {self.parity}; hypotheses hold: {self.hypotheses_hold}"
        return "\n".join([head] + ["  " + f.describe() for f in self.failures])


def load_period(path) -> PeriodWords:
    """Read the JSON document ``{"n_plus_1", "a", "c", "b"?}``."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc
    return period_from_json(doc)


def period_from_json(doc) -> PeriodWords:
    if not isinstance(doc, dict):
        raise InputError("period document must be a JSON object")
    missing = [k for k in ("n_plus_1", "a", "c") if k not in doc]
    if missing:
        raise InputError(f"period document lacks {', '.join(missing)}")
    size = doc["n_plus_1"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 2:
        raise InputError("n_plus_1 must be an integer >= 2")

    def dec(values, name):
        if not isinstance(values, list):
            raise InputError(f"{name} must be a list")
        out = []
        for v in values:
            if isinstance(v, list) and len(v) == 2:
                out.append(complex(float(v[0]), float(v[1])))
            elif isinstance(v, (int, float)) and not isinstance(v, bool):
                out.append(complex(v))
            else:
                raise InputError(f"{name}: entries must be numbers or [re, im] pairs")
        if len(out) != size:
            raise InputError(f"{name} has length {len(out)}, expected n_plus_1={size}")
        return np.array(out)

    b = dec(doc["b"], "b") if doc.get("b") is not None else None
    return PeriodWords(a=dec(doc["a"], "a"), c=dec(doc["c"], "c"), b=b)


def hopping_sign() -> PeriodWords:
    """The 2-periodic hopping sign model ``a = (-1, 1)``, ``c = (1, 1)``."""
    return PeriodWords(a=[-1.0, 1.0], c=[1.0, 1.0])


def shift_words(n_plus_1: int) -> PeriodWords:
    """``a = 0 1 0 ... 0`` and ``c = 1 1 ... 1``."""
    a = np.zeros(n_plus_1)
    a[1] = 1.0
    return PeriodWords(a=a, c=np.ones(n_plus_1))


def _condition_pairs(m: int):
    """Yield ``(name, j, j, mirror index, "+"/"-")`` per modulus condition."""
    n = m - 1
    for j in range(1, n // 2 + 1):
        k = (n - j + 1) % m
        for kind, op in (("+", "+"), ("-", "−")):
            name = f"|c_{j}{op}a_{(j + 1) % m}| = |c_{k}{op}a_{(k + 1) % m}|"
            yield name, j, j, k, kind


def validate_period(p: PeriodWords, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Check the symmetry hypotheses under which A+/A- describe W(T).

    Every violated condition is reported with both sides' values.
    """
    if tol < 0:
        raise InputError("tol must be nonnegative")
    m = p.n_plus_1
    parity = "odd" if m % 2 else "even"
    failures = []
    if not p.is_real:
        imag = float(max(np.max(np.abs(np.imag(p.a))), np.max(np.abs(np.imag(p.c)))))
        failures.append(ValidationFailure("Im(a, c) = 0", -1, imag, 0.0))
    if not p.has_zero_diagonal:
        for j, bj in enumerate(p.b):
            if bj != 0:
                failures.append(ValidationFailure(f"b_{j} = 0", j, float(abs(bj)), 0.0))
    a = np.real(p.a)
    c = np.real(p.c)
    if abs(c[0] - a[1 % m]) > tol:
        failures.append(ValidationFailure("c_0 = a_1", 0, float(c[0]), float(a[1 % m])))
    for name, j, lo, hi, kind in _condition_pairs(m):
        s = 1.0 if kind == "+" else -1.0
        lhs = abs(c[lo] + s * a[(lo + 1) % m])
        rhs = abs(c[hi] + s * a[(hi + 1) % m])
        if abs(lhs - rhs) > tol:
            failures.append(ValidationFailure(name, j, float(lhs), float(rhs)))
    return ValidationReport(hypotheses_hold=not failures, failures=failures, parity=parity)


def require_hypotheses(p: PeriodWords, tol: float = DEFAULT_TOL) -> ValidationReport:
    report = validate_period(p, tol)
    if not report.hypotheses_hold:
        raise HypothesisError(report)
    return report


def symbol_coefficients(p: PeriodWords) -> SymbolCoefficients:
    """``alpha_j`` and ``g_j`` (with ``gamma_j = i g_j``) for real words."""
    if not p.is_real:
        raise InputError("symbol coefficients need real words a, c")
    a, c = p.a, p.c
    m = p.n_plus_1
    nxt = np.roll(a, -1)  # a_{j+1}, cyclically
    alpha = (c + nxt) / 2.0
    gamma_im = -(c - nxt) / 2.0 + 0.0
    # the last coefficient pairs a_0 with c_n in the opposite order
    gamma_im[m - 1] = -(a[0] - c[m - 1]) / 2.0 + 0.0
    return SymbolCoefficients(alpha=alpha, gamma_im=gamma_im)


def proposition_coefficients(p: PeriodWords) -> tuple[np.ndarray, np.ndarray]:
    """Complex ``alpha_j``, ``gamma_j`` for arbitrary (possibly complex) words."""
    a = np.asarray(p.a, dtype=complex)
    c = np.asarray(p.c, dtype=complex)
    m = p.n_plus_1
    nxt = np.conj(np.roll(a, -1))
    alpha = (c + nxt) / 2.0
    gamma = (c - nxt) / 2j
    alpha[m - 1] = (a[0] + np.conj(c[m - 1])) / 2.0
    gamma[m - 1] = (a[0] - np.conj(c[m - 1])) / 2j
    return alpha, gamma


def _check_sign(sign: int) -> float:
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    return float(sign)


def build_A_pm(p: PeriodWords, sign: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The (n+1)x(n+1) matrix with corners ``sign*a_1`` and ``sign*c_0``."""
    s = _check_sign(sign)
    require_hypotheses(p, tol)
    m = p.n_plus_1
    a, c = np.real(p.a), np.real(p.c)
    A = np.zeros((m, m), dtype=complex)
    for k in range(m - 1):
        A[k, k + 1] = c[k + 1]
        A[k + 1, k] = a[(k + 2) % m]
    A[0, 0] += s * a[1]
    A[m - 1, m - 1] += s * c[0]
    return A


def build_B_pm(p: PeriodWords, sign: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The (n/2+1)x(n/2+1) reduction available when n+1 is odd."""
    s = _check_sign(sign)
    m = p.n_plus_1
    if m % 2 == 0:
        raise ParityError(f"B± need an odd period length, got n+1={m}")
    require_hypotheses(p, tol)
    h = p.n // 2
    a, c = np.real(p.a), np.real(p.c)
    B = np.zeros((h + 1, h + 1), dtype=complex)
    for k in range(h - 1):
        B[k, k + 1] = c[k + 1]
        B[k + 1, k] = a[k + 2]
    B[h - 1, h] = math.sqrt(2.0) * c[h]
    B[h, h - 1] = math.sqrt(2.0) * a[h + 1]
    B[0, 0] = s * a[1]
    return B


def build_B1_pm(p: PeriodWords, sign: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Leading (n/2)x(n/2) submatrix of B±."""
    B = build_B_pm(p, sign, tol)
    return B[:-1, :-1].copy()


def build_truncation(p: PeriodWords, N: int) -> np.ndarray:
    """Leading N x N section of the infinite matrix of T(a, b, c)."""
    if N < 1:
        raise InputError("truncation size must be positive")
    m = p.n_plus_1
    T = np.zeros((N, N), dtype=complex)
    for k in range(N):
        T[k, k] = p.b[k % m]
        if k + 1 < N:
            T[k, k + 1] = p.c[k % m]
            T[k + 1, k] = p.a[(k + 1) % m]
    return T


def random_valid_period(rng: SplitMix64, n_plus_1: int, radius: float = 2.0) -> PeriodWords:
    """Random real words that satisfy the hypotheses exactly.

    Draws ``u_j = c_j + a_{j+1}`` and ``v_j = c_j - a_{j+1}`` with the
    mirrored pairs equal up to sign and ``v_0 = 0``, then solves for a, c.
    """
    m = n_plus_1
    if m < 2:
        raise InputError("period length must be at least 2")
    n = m - 1
    u = np.array([rng.uniform(-radius, radius) for _ in range(m)])
    v = np.array([rng.uniform(-radius, radius) for _ in range(m)])
    v[0] = 0.0
    for j in range(1, n // 2 + 1):
        k = n - j + 1
        if k != j:
            u[k] = rng.sign() * u[j]
            v[k] = rng.sign() * v[j]
    c = (u + v) / 2.0
    a = np.empty(m)
    for j in range(m):
        a[(j + 1) % m] = (u[j] - v[j]) / 2.0
    return PeriodWords(a=a, c=c)

