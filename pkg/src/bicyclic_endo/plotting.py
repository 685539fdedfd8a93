"""Figures for the report paths of the CLI."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .conv_iso import ConvSemigroup, hasse_edges  # noqa: E402
from .matrix_units import enumerate_endomorphisms  # noqa: E402
from .zero import ZERO  # noqa: E402


def _position(e, W):
    if e is ZERO:
        return (W / 2.0, 0)
    return (e.s + (e.k - 1) / 2.0, e.k)


def plot_hasse(W: int, n: int, path, ax=None):
    """Idempotents of I_omega^n(conv) with dom inside [0, W], placed by domain midpoint and rank."""
    nodes = ConvSemigroup(n).idempotents(W)
    own = ax is None
    if own:
        fig, ax = plt.subplots(figsize=(max(4, 0.9 * (W + 1)), 1.2 * (n + 2)))
    for lo, hi in hasse_edges(W, n):
        (x0, y0), (x1, y1) = _position(lo, W), _position(hi, W)
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    for e in nodes:
        x, y = _position(e, W)
        ax.scatter([x], [y], s=30, color="k", zorder=2)
        label = "0" if e is ZERO else f"[{e.s},{e.s + e.k - 1}]"
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(0, 6), ha="center", fontsize=7)
    ax.set_ylabel("rank")
    ax.set_yticks(range(n + 1))
    ax.set_xticks([])
    ax.set_title(f"idempotents of I^{n}(conv), domains in [0,{W}]")
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    if own:
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return path


def plot_end_composition(lam: int, path):
    """Composition table of End(B_lambda); cell (r, c) shows the index of r then c."""
    ends = enumerate_endomorphisms(lam)
    ends.sort(key=lambda e: (e.is_constant(), e.images))
    index = {e: i for i, e in enumerate(ends)}
    grid = [[index[a @ b] for b in ends] for a in ends]
    size = len(ends)
    fig, ax = plt.subplots(figsize=(0.35 * size + 2, 0.35 * size + 1.5))
    im = ax.imshow(grid, cmap="viridis", interpolation="nearest")
    n_inj = sum(not e.is_constant() for e in ends)
    ax.axhline(n_inj - 0.5, color="w", lw=1.5)
    ax.axvline(n_inj - 0.5, color="w", lw=1.5)
    ax.set_xlabel("second factor")
    ax.set_ylabel("first factor")
    ax.set_title(f"End(B_{lam}): {n_inj} injective | {size - n_inj} annihilating")
    fig.colorbar(im, ax=ax, label="product index")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

