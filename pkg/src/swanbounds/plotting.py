"""Figures for prime scans.

Orders of the computed groups are plotted against p on a log axis, one
marker style per splitting type, so the inert primes (lower bound
(p+1)/2) stand out against the split ones (lower bound trivial).
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import ScanRow  # noqa: E402

MARKERS = {"inert": "o", "split": "s", "ramified": "^"}

RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _order(g) -> int | None:
    if g is None:
        return None
    out = 1
    for n in g:
        out *= n
    return out


def plot_scan(rows: Sequence[ScanRow], path: str | Path, title: str | None = None) -> Path:
    """Write the scan figure to ``path`` (format from the suffix)."""
    path = Path(path)
    with plt.rc_context(RC):
        fig, (ax_t, ax_rd) = plt.subplots(1, 2, figsize=(9, 3.6), sharex=True)
        for kind, marker in MARKERS.items():
            sel = [r for r in rows if r.splitting == kind]
            if not sel:
                continue
            ps = [r.p for r in sel]
            ax_t.vlines(ps, [_order(r.lower_t) for r in sel], [_order(r.upper_t) for r in sel],
                        color="0.7", lw=1)
            ax_t.scatter(ps, [_order(r.upper_t) for r in sel], marker=marker, facecolors="none",
                         edgecolors="k", label=f"{kind}: upper")
            ax_t.scatter(ps, [_order(r.lower_t) for r in sel], marker=marker, c="C0",
                         label=f"{kind}: lower")
            with_upper = [r for r in sel if r.upper_rd is not None]
            ax_rd.scatter([r.p for r in sel], [_order(r.lower_rd) for r in sel], marker=marker,
                          c="C1", label=f"{kind}: lower")
            if with_upper:
                ax_rd.scatter([r.p for r in with_upper], [_order(r.upper_rd) for r in with_upper],
                              marker=marker, facecolors="none", edgecolors="k",
                              label=f"{kind}: upper")
        for ax, name in ((ax_t, "|T|"), (ax_rd, "|R ∩ D|")):
            ax.set_yscale("log")
            ax.set_xlabel("p")
            ax.set_ylabel(name + " bounds")
        ax_t.legend(frameon=False, loc="upper left", fontsize=7)
        if title:
            fig.suptitle(title)
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return path
