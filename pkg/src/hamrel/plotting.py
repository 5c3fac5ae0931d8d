"""Figure rendering for the report commands (headless matplotlib)."""
from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def render_curves(rows: Sequence[dict], out_path: str, title: str) -> None:
    """Plot reliability curves: exact, fit, dual fit, and the two bounds."""
    ps = [r["p"] for r in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(ps, [r["h_exact"] for r in rows], "r-", label="exact")
    ax.plot(ps, [r["h_approx"] for r in rows], "g:", linewidth=2, label="fit")
    ax.plot(ps, [r["h_dual_approx"] for r in rows], "g-.", linewidth=1, label="dual fit")
    ax.plot(ps, [r["lb"] for r in rows], "b--", linewidth=1, label="lower bound")
    ax.plot(ps, [r["ub"] for r in rows], "b--", linewidth=1, label="upper bound")
    ax.set_xlabel("p")
    ax.set_ylabel("h(p)")
    ax.set_xlim(0.0, 1.0)
    ax.set_title(title)
    ax.legend(loc="best", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.savefig(out_path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_coefficients(rows: Sequence[dict], out_path: str, title: str) -> None:
    """Plot the exact coefficient profile against the fitted curve."""
    xs = [r["x"] for r in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(xs, [r["coeff_exact"] for r in rows], "ko", markersize=4, label="exact")
    ax.plot(xs, [r["coeff_fit"] for r in rows], "r-", linewidth=1.5, label="fit")
    ax.set_xlabel("k")
    ax.set_ylabel("coefficient")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.savefig(out_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
