"""Matplotlib figures for bench reports.  Uses the Agg backend; files only."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def heights_figure(report, path, title=None):
    """Grouped bars per semigroup: max exhaustive height, max random height, 3|S|."""
    rows = report["rows"]
    names = [r["semigroup"] for r in rows]
    x = np.arange(len(rows))
    width = 0.27

    fig, ax = plt.subplots(figsize=(max(6, 0.7 * len(rows) + 2), 4))
    ax.bar(x - width, [r["exhaustive_max_height"] for r in rows], width,
           label=f"words <= {report['max_len']}")
    ax.bar(x, [r["random_max_height"] for r in rows], width,
           label=f"random, length {rows[0]['random_length'] if rows else 0}")
    ax.bar(x + width, [r["bound"] for r in rows], width, color="0.8", label="3|S|")
    ax.set_xticks(x)
    ax.set_xticklabels(names, rotation=45, ha="right")
    ax.set_ylabel("tree height")
    ax.set_title(title or f"observed height vs bound (seed {report['seed']})")
    ax.legend(frameon=False, fontsize="small")
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
