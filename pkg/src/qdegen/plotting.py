"""Figure rendering for the report path.

Renders the convergence curve and the root constellation to image files next
to the delimited output.  Everything here is presentation only; no
computation happens in this module.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .spectral import ConvergencePoint, PisotReport


def save_convergence_figure(
    points: list[ConvergencePoint], dominant: float, k: int, path: str
) -> None:
    """Per-site count vs chain length with the dominant-root reference line."""
    fig, (ax, ax_gap) = plt.subplots(
        2, 1, figsize=(7, 6), sharex=True, height_ratios=[2, 1]
    )
    ns = [p.n for p in points]
    ax.plot(ns, [p.per_site for p in points], "o-", ms=4, label=r"$S_n^{1/n}$")
    ax.axhline(dominant, color="crimson", ls="--", lw=1,
               label=f"dominant root {dominant:.9f}")
    ax.set_xscale("log")
    ax.set_ylabel("ground states per site")
    ax.set_title(f"convergence of the per-site count, window k = {k}")
    ax.legend()
    ax_gap.plot(ns, [p.gap for p in points], "s-", ms=3, color="gray")
    ax_gap.set_xscale("log")
    ax_gap.set_yscale("log")
    ax_gap.set_xlabel("chain length n")
    ax_gap.set_ylabel("gap to limit")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_root_figure(reports: list[PisotReport], path: str) -> None:
    """Root constellations in the complex plane against the unit circle."""
    fig, ax = plt.subplots(figsize=(6, 6))
    theta = [2 * math.pi * t / 512 for t in range(513)]
    ax.plot([math.cos(t) for t in theta], [math.sin(t) for t in theta],
            color="black", lw=0.8, label="unit circle")
    cmap = plt.get_cmap("viridis")
    k_lo = min(r.k for r in reports)
    k_hi = max(r.k for r in reports)
    for rep in reports:
        frac = 0.0 if k_hi == k_lo else (rep.k - k_lo) / (k_hi - k_lo)
        color = cmap(frac)
        ax.plot([z.real for z in rep.conjugates],
                [z.imag for z in rep.conjugates],
                "o", ms=4, color=color, alpha=0.8)
        ax.plot([rep.dominant_root], [0.0], "*", ms=10, color=color)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"characteristic roots, k = {k_lo}..{k_hi} "
                 "(stars: dominant; dots: conjugates)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_count_figure(rows: list[tuple[int, int]], k: int, path: str) -> None:
    """Ground-state count vs chain length on a log scale."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = [n for n, _ in rows]
    # Plot log10 of the exact counts; the integers themselves may exceed floats.
    logs = [math.log10(c) if c > 0 else 0.0 for _, c in rows]
    ax.plot(ns, logs, "o-", ms=3)
    ax.set_xlabel("chain length n")
    ax.set_ylabel(r"$\log_{10}$ ground states")
    ax.set_title(f"ground-state count growth, window k = {k}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
