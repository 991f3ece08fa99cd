"""Matplotlib figures for the CLI report path (rendered off-screen)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .report import COLORS, convex_hull  # noqa: E402


def render_boundary_figure(sets: dict, path, title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(5, 5))
    points = [complex(z) for pts in sets.values() for z in pts]
    hull = convex_hull(points)
    if len(hull) >= 3:
        hz = np.array(hull + hull[:1])
        ax.fill(hz.real, hz.imag, color="0.85", zorder=0, label="hull")
        ax.plot(hz.real, hz.imag, color="0.3", lw=0.8, zorder=1)
    for i, (label, pts) in enumerate(sets.items()):
        z = np.array([complex(v) for v in pts])
        z = np.append(z, z[:1])
        ax.plot(z.real, z.imag, color=COLORS[i % len(COLORS)], lw=1.2, label=label, zorder=2)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.legend(loc="best", fontsize="small")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_profiles_figure(thetas, curves: dict, path, title: str = "", ylabel: str = "h") -> None:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for i, (label, values) in enumerate(curves.items()):
        ax.plot(thetas, values, color=COLORS[i % len(COLORS)], lw=1.0, label=label)
    ax.set_xlabel("theta")
    ax.set_ylabel(ylabel)
    ax.set_xlim(float(thetas[0]), float(thetas[-1]))
    ax.legend(loc="best", fontsize="small")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
