"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a numerical check exceeds its
tolerance, 2 for bad input, usage errors and I/O failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fuzz
from .errors import InputError
from .numrange import (
    DEFAULT_GRID,
    DEFAULT_TOL,
    boundary_points,
    check_corollary,
    check_theorem,
    polynomial_profile,
    support_profile,
    theta_grid,
    truncation_study,
)
from .period import (
    PeriodWords,
    build_A_pm,
    build_B1_pm,
    build_B_pm,
    load_period,
    require_hypotheses,
    symbol_coefficients,
    validate_period,
)
from .report import emit_boundary_csv, emit_boundary_svg, emit_support_csv, emit_table_csv

COMMANDS = (
    "validate",
    "matrices",
    "support",
    "boundary",
    "check-theorem",
    "check-corollary",
    "truncation",
    "fuzz-lemmas",
)
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    input_path: Path | None = None
    grid: int = DEFAULT_GRID
    tol: float = DEFAULT_TOL
    trials: int = 1000
    seed: int = 42
    out_path: Path | None = None
    svg: bool = False
    plot: bool = False
    source: str = "hull"
    sizes: tuple = (2, 4, 8, 16, 32, 64)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.grid < 4:
            raise InputError("--grid must be at least 4")
        if not self.tol > 0:
            raise InputError("--tol must be positive")
        if self.trials < 1:
            raise InputError("--trials must be positive")
        if not 0 <= self.seed < 2**64:
            raise InputError("--seed must be a 64-bit unsigned integer")
        if self.source not in ("hull", "reduced", "polynomial"):
            raise InputError("--source must be hull, reduced or polynomial")
        if self.command not in ("fuzz-lemmas",) and self.input_path is None:
            raise InputError(f"{self.command} needs an input JSON file")


def _say(lines) -> None:
    for line in lines:
        print(line)


def _sidecar(config: RunConfig, suffix: str) -> Path:
    """Figure path next to --out, or in the working directory."""
    if config.out_path is not None:
        return config.out_path.with_suffix(suffix)
    return Path(config.command.replace("-", "_") + suffix)


def _matrix_json(M: np.ndarray) -> list:
    return [[[float(z.real) + 0.0, float(z.imag) + 0.0] for z in row] for row in M]


def _format_matrix(M: np.ndarray) -> list[str]:
    real = np.all(M.imag == 0)
    rows = []
    for row in M:
        if real:
            rows.append("  [" + ", ".join(f"{z.real: .6g}" for z in row) + "]")
        else:
            rows.append("  [" + ", ".join(f"{z:.6g}" for z in row) + "]")
    return rows


def _pair(p: PeriodWords, source: str) -> dict:
    if source == "reduced":
        return {"B+": build_B_pm(p, 1), "B-": build_B_pm(p, -1)}
    return {"A+": build_A_pm(p, 1), "A-": build_A_pm(p, -1)}


def _cmd_validate(config: RunConfig, p: PeriodWords) -> int:
    report = validate_period(p)
    print(f"n+1 = {p.n_plus_1} ({report.parity})")
    if report.hypotheses_hold:
        print("hypotheses hold")
        return EXIT_OK
    print("hypotheses fail:")
    _say("  " + f.describe() for f in report.failures)
    return EXIT_INPUT


def _cmd_matrices(config: RunConfig, p: PeriodWords) -> int:
    require_hypotheses(p)
    sc = symbol_coefficients(p)
    print("alpha = " + " ".join(f"{v:.6g}" for v in sc.alpha))
    print("Im gamma = " + " ".join(f"{v:.6g}" for v in sc.gamma_im))
    mats = _pair(p, "hull")
    if p.n_plus_1 % 2:
        mats.update(_pair(p, "reduced"))
        mats["B1+"] = build_B1_pm(p, 1)
        mats["B1-"] = build_B1_pm(p, -1)
    for name, M in mats.items():
        print(f"{name} =")
        _say(_format_matrix(M))
    if config.out_path is not None:
        doc = {name: _matrix_json(M) for name, M in mats.items()}
        config.out_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def _cmd_support(config: RunConfig, p: PeriodWords) -> int:
    if config.source == "polynomial":
        profile = polynomial_profile(p, config.grid)
        label = "max_root_P"
    else:
        require_hypotheses(p)
        mats = _pair(p, config.source)
        label = "conv(" + " u ".join(f"W({k})" for k in mats) + ")"
        profile = support_profile(list(mats.values()), config.grid, label)
    print(f"support of {label}, grid = {profile.grid}")
    print(f"min h = {profile.values.min():.12g}, max h = {profile.values.max():.12g}")
    if config.out_path is not None:
        emit_support_csv(profile, config.out_path)
    if config.plot:
        from .plotting import render_profiles_figure

        render_profiles_figure(profile.thetas, {label: profile.values}, _sidecar(config, ".png"))
    return EXIT_OK


def _cmd_boundary(config: RunConfig, p: PeriodWords) -> int:
    require_hypotheses(p)
    mats = _pair(p, "reduced" if config.source == "reduced" else "hull")
    sets = {}
    for name, M in mats.items():
        samples = boundary_points(M, config.grid)
        sets[name] = [s.point for s in samples]
        flagged = sum(s.degenerate for s in samples)
        print(f"{name}: {len(samples)} boundary samples, {flagged} on flat edges")
    if config.out_path is not None:
        emit_boundary_csv(sets, theta_grid(config.grid), config.out_path)
    if config.svg:
        hull = emit_boundary_svg(sets, _sidecar(config, ".svg"))
        print(f"hull polygon: {len(hull)} vertices")
    if config.plot:
        from .plotting import render_boundary_figure

        render_boundary_figure(sets, _sidecar(config, ".png"))
    return EXIT_OK


def _cmd_check_theorem(config: RunConfig, p: PeriodWords) -> int:
    report = check_theorem(p, config.grid, config.tol, seed=config.seed)
    _say(report.lines())
    if config.out_path is not None:
        emit_table_csv(
            {"theta": report.thetas, "max_root_P": report.max_roots, "h_hull": report.hull_support},
            config.out_path,
        )
    if config.plot:
        from .plotting import render_profiles_figure

        render_profiles_figure(
            report.thetas,
            {"max_root_P": report.max_roots, "conv(W(A+) u W(A-))": report.hull_support},
            _sidecar(config, ".png"),
        )
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_check_corollary(config: RunConfig, p: PeriodWords) -> int:
    report = check_corollary(p, config.grid, config.tol, seed=config.seed)
    _say(report.lines())
    if config.out_path is not None:
        emit_table_csv({"theta": report.thetas, "h_A": report.hull_A, "h_B": report.hull_B}, config.out_path)
    if config.plot:
        from .plotting import render_profiles_figure

        render_profiles_figure(
            report.thetas, {"hull of A+/A-": report.hull_A, "hull of B+/B-": report.hull_B}, _sidecar(config, ".png")
        )
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_truncation(config: RunConfig, p: PeriodWords) -> int:
    report = truncation_study(p, config.sizes, config.grid, config.tol)
    _say(report.lines())
    columns = {"theta": report.thetas}
    for N, row in zip(report.sizes, report.profiles):
        columns[f"h_{N}"] = row
    columns["limit"] = report.limit
    if config.out_path is not None:
        emit_table_csv(columns, config.out_path)
    if config.plot:
        from .plotting import render_profiles_figure

        curves = {k: v for k, v in columns.items() if k != "theta"}
        render_profiles_figure(report.thetas, curves, _sidecar(config, ".png"))
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_fuzz_lemmas(config: RunConfig, p=None) -> int:
    results = [fuzz.fuzz_almost_tridiag(config.trials, config.seed, tol=config.tol)]
    for parity in ("odd", "even"):
        results.extend(fuzz.fuzz_palindromic(config.trials, config.seed, parity, tol=config.tol))
    _say(r.line() for r in results)
    print(f"max relative residual = {max(r.worst for r in results):.3e}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


HANDLERS = {
    "validate": _cmd_validate,
    "matrices": _cmd_matrices,
    "support": _cmd_support,
    "boundary": _cmd_boundary,
    "check-theorem": _cmd_check_theorem,
    "check-corollary": _cmd_check_corollary,
    "truncation": _cmd_truncation,
    "fuzz-lemmas": _cmd_fuzz_lemmas,
}


def run(config: RunConfig) -> int:
    """Dispatch one command; always returns 0, 1 or 2."""
    try:
        p = load_period(config.input_path) if config.input_path is not None else None
        return HANDLERS[config.command](config, p)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        # a value that should be real came out complex: the check failed
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def _parse_sizes(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pertri",
        description="Numerical ranges of periodic tridiagonal operators via their finite symbol matrices.",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", type=Path, help="period words as JSON")
    ap.add_argument("--grid", type=int, default=DEFAULT_GRID, help="number of directions (default 720)")
    ap.add_argument("--tol", type=float, default=DEFAULT_TOL, help="pass/fail tolerance (default 1e-8)")
    ap.add_argument("--trials", type=int, default=1000, help="random instances per fuzz harness")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", type=Path, default=None, help="machine-readable output file")
    ap.add_argument("--svg", action="store_true", help="boundary: write an SVG next to --out")
    ap.add_argument("--plot", action="store_true", help="render a matplotlib PNG next to --out")
    ap.add_argument(
        "--source",
        default="hull",
        choices=("hull", "reduced", "polynomial"),
        help="support/boundary: A+/A-, B+/B- (odd n+1) or the polynomial root",
    )
    ap.add_argument("--sizes", type=_parse_sizes, default=(2, 4, 8, 16, 32, 64), help="truncation sizes, e.g. 2,4,8")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            grid=args.grid,
            tol=args.tol,
            trials=args.trials,
            seed=args.seed,
            out_path=args.out,
            svg=args.svg,
            plot=args.plot,
            source=args.source,
            sizes=args.sizes,
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
